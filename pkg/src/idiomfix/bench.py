"""Mutation benchmark: score groups of deliberately garbled idioms.

Each benchmark group takes one dictionary idiom, derives two mutants
from it (same-pronunciation character swaps, or same-base tone swaps),
and checks whether the matcher still points every member back at the
original idiom. The report carries one CSV row per group:
``word,n,c,time,s1,s2,s3,sa`` where s1 is the idiom's self-score, s2/s3
the mutant scores against it, and sa their mean.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace

from .dictionary import IdiomDict, IdiomEntry
from .pinyin import PinyinSyllable, PinyinTable
from .scoring import (
    DEFAULT_WEIGHTS,
    ScoreWeights,
    best_match,
    pinyin_score,
    pinyin_word_score,
    tone_score,
    total_score,
)

__all__ = [
    "MutationSpec",
    "GroupResult",
    "SuiteReport",
    "mutate_idiom",
    "run_group",
    "run_suite",
    "resolve_idiom_id",
    "pinyin_id",
    "parse_suite_config",
]

GROUP_SIZE = 3  # one correct member plus two mutants


@dataclass(frozen=True, slots=True)
class MutationSpec:
    """What to garble: word swaps or tone swaps at 1-based positions."""

    kind: str
    indices: tuple[int, ...]
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("word", "tone"):
            raise ValueError(f"kind must be 'word' or 'tone', got {self.kind!r}")
        if not self.indices:
            raise ValueError("indices must be non-empty")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError(f"indices must be distinct, got {self.indices}")
        if any(i < 1 for i in self.indices):
            raise ValueError(f"indices are 1-based, got {self.indices}")


@dataclass(frozen=True, slots=True)
class GroupResult:
    """One benchmark row."""

    word: str
    n: int
    c: int
    time_s: float
    s1: float
    s2: float
    s3: float

    @property
    def sa(self) -> float:
        return (self.s2 + self.s3) / 2


def pinyin_id(entry: IdiomEntry) -> str:
    """Underscore-joined toneless pinyin, e.g. ``po_bu_ji_dai``."""
    return "_".join(s.base for s in entry.syllables)


def resolve_idiom_id(idiom_dict: IdiomDict, ident: str) -> IdiomEntry:
    """Find an entry by literal word or by underscore-joined pinyin id."""
    entry = idiom_dict.get(ident)
    if entry is not None:
        return entry
    for e in idiom_dict.entries:
        if pinyin_id(e) == ident:
            return e
    raise KeyError(f"no idiom matches {ident!r}")


def _substitutes(
    table: PinyinTable, syllable: PinyinSyllable, original: str
) -> list[str]:
    # Only characters whose default reading is the target syllable keep
    # the mutant's regenerated pinyin identical to the intent.
    return [
        ch
        for ch in table.homophones(syllable, exclude=original)
        if table.primary_reading(ch) == syllable
    ]


def mutate_idiom(entry: IdiomEntry, spec: MutationSpec, table: PinyinTable) -> str:
    """Return the idiom with the spec's positions garbled.

    ``word`` swaps a position's character for a different one with the
    same base and tone; ``tone`` picks a new tone for the base first,
    then a character carrying it. Choices are deterministic in
    (seed, kind, word). Raises ValueError naming the first position
    with no available substitute.
    """
    if any(i > len(entry.word) for i in spec.indices):
        raise ValueError(f"index out of range for {entry.word!r}: {spec.indices}")
    rng = random.Random(f"{spec.seed}:{spec.kind}:{entry.word}")
    chars = list(entry.word)
    for index in spec.indices:
        i = index - 1
        syllable = entry.syllables[i]
        if spec.kind == "word":
            candidates = _substitutes(table, syllable, entry.word[i])
            if not candidates:
                raise ValueError(f"{entry.word!r}: no homophone substitute at position {index}")
            chars[i] = rng.choice(candidates)
        else:
            options = []
            for t in range(5):
                if t == syllable.tone:
                    continue
                alt = PinyinSyllable(syllable.base, t)
                cands = _substitutes(table, alt, entry.word[i])
                if cands:
                    options.append((t, cands))
            if not options:
                raise ValueError(f"{entry.word!r}: no tone substitute at position {index}")
            _, cands = rng.choice(options)
            chars[i] = rng.choice(cands)
    return "".join(chars)


def run_group(
    entry: IdiomEntry,
    spec: MutationSpec,
    idiom_dict: IdiomDict,
    table: PinyinTable,
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> GroupResult:
    """Score one group: the idiom itself plus two independently seeded mutants.

    ``c`` counts members whose best match is the original entry; the
    timing covers only the three matcher calls.
    """
    members = [
        entry.word,
        mutate_idiom(entry, spec, table),
        mutate_idiom(entry, replace(spec, seed=spec.seed + 1), table),
    ]
    readings = [table.sentence_pinyin(m) for m in members]

    start = time.perf_counter()
    detected = 0
    for text, sylls in zip(members, readings):
        result = best_match(text, sylls, idiom_dict, weights)
        if result is not None and result[0].word == entry.word:
            detected += 1
    elapsed = time.perf_counter() - start

    totals = []
    for sylls in readings:
        if any(s is None for s in sylls):
            raise ValueError(f"{entry.word!r}: mutant contains a character without a reading")
        ps = pinyin_score(sylls, entry.syllables, weights)
        ws = pinyin_word_score(sylls, entry.syllables, weights)
        ts = tone_score(sylls, entry.syllables, weights)
        totals.append(total_score(ps, ts, ws, weights))

    return GroupResult(
        word=pinyin_id(entry),
        n=GROUP_SIZE,
        c=detected,
        time_s=elapsed,
        s1=totals[0],
        s2=totals[1],
        s3=totals[2],
    )


@dataclass
class SuiteReport:
    """All group rows plus the identifiers that could not be run."""

    rows: list[GroupResult]
    errors: list[str]

    def to_csv(self) -> str:
        lines = ["word,n,c,time,s1,s2,s3,sa"]
        for r in self.rows:
            lines.append(
                ",".join(
                    (
                        r.word,
                        str(r.n),
                        str(r.c),
                        _fmt(r.time_s, 3),
                        _fmt(r.s1, 2),
                        _fmt(r.s2, 2),
                        _fmt(r.s3, 2),
                        f"{r.sa:.1f}",
                    )
                )
            )
        return "\n".join(lines) + "\n"


def _fmt(value: float, places: int) -> str:
    text = f"{value:.{places}f}".rstrip("0")
    return text + "0" if text.endswith(".") else text


def run_suite(
    idiom_dict: IdiomDict,
    table: PinyinTable,
    specs: list[MutationSpec],
    idiom_ids: list[str],
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> SuiteReport:
    """Run every (spec, idiom) pair in input order.

    Identifiers that cannot be resolved, and idioms with no available
    substitute at a requested position, land in the report's errors
    instead of aborting the run.
    """
    rows: list[GroupResult] = []
    errors: list[str] = []
    for spec in specs:
        for ident in idiom_ids:
            try:
                entry = resolve_idiom_id(idiom_dict, ident)
            except KeyError:
                errors.append(f"{ident}: not found in dictionary")
                continue
            try:
                rows.append(run_group(entry, spec, idiom_dict, table, weights))
            except ValueError as exc:
                errors.append(f"{ident}: {exc}")
    return SuiteReport(rows, errors)


def parse_suite_config(text: str, default_seed: int = 0) -> tuple[list[MutationSpec], list[str]]:
    """Parse a suite file: one idiom id or one ``kind=... indices=...`` per line.

    Example::

        # word swaps at the first position
        kind=word indices=1 seed=7
        ri_chu_san_gan
        po_bu_ji_dai

    Lines carrying ``kind=`` declare mutation specs (``seed`` optional);
    all other non-blank, non-comment lines are idiom identifiers.
    """
    specs: list[MutationSpec] = []
    ids: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "kind=" in line:
            fields: dict[str, str] = {}
            for token in line.split():
                key, sep, value = token.partition("=")
                if not sep:
                    raise ValueError(f"line {lineno}: expected key=value, got {token!r}")
                fields[key] = value
            unknown = set(fields) - {"kind", "indices", "seed"}
            if unknown:
                raise ValueError(f"line {lineno}: unknown keys {sorted(unknown)}")
            if "indices" not in fields:
                raise ValueError(f"line {lineno}: spec needs indices=")
            try:
                indices = tuple(int(tok) for tok in fields["indices"].split(",") if tok)
                seed = int(fields.get("seed", default_seed))
            except ValueError:
                raise ValueError(f"line {lineno}: indices and seed must be integers") from None
            specs.append(MutationSpec(fields["kind"], indices, seed))
        else:
            ids.append(line)
    return specs, ids
