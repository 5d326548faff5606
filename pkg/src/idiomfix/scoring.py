"""Similarity scoring between a text window and a dictionary idiom.

A candidate window is compared to an idiom of the same length through
four sub-scores:

* align score - positional character identity; used only as an
  admission gate, never in the combined score.
* pinyin score - letter-by-letter agreement inside each syllable base,
  summed over all positions.
* pinyin word score - whole-syllable agreement per position, rewarded
  with +c and punished with -c (totals can go negative; no clamping).
* tone score - mean squared tone difference, scaled by p; always >= 0.

The combined score is ``pinyin*pp - tone*pt + word*ppl``. For an idiom
scored against itself this reduces to ``b*sum(len(base)) + c*n``, the
maximum achievable for that idiom.

All functions are pure. Sub-scores multiply the configured weight by a
match count rather than accumulating it, so results are reproducible
bit-for-bit regardless of evaluation order.
"""

from __future__ import annotations

import os
import weakref
from dataclasses import dataclass, fields
from typing import Mapping, Sequence

import numpy as np

from .dictionary import IdiomDict, IdiomEntry
from .pinyin import PinyinSyllable

__all__ = [
    "ScoreWeights",
    "ScoreBreakdown",
    "DEFAULT_WEIGHTS",
    "align_score",
    "align_gate",
    "pinyin_score",
    "pinyin_word_score",
    "tone_score",
    "total_score",
    "score_pair",
    "self_score",
    "best_match",
]


@dataclass(frozen=True, slots=True)
class ScoreWeights:
    """Tunable scoring constants.

    a: increment per positionally matching character (align score).
    b: increment per matching letter inside a syllable base.
    c: reward/penalty per whole-syllable match/mismatch.
    p: scale on the mean squared tone difference.
    pp, pt, ppl: mix weights of the pinyin, tone, and word sub-scores.
    align_divisor: gate threshold divisor; a pair is admitted when its
        align score reaches ``floor(n / align_divisor)``.
    """

    a: float = 1.0
    b: float = 1.0
    c: float = 2.0
    p: float = 1.0
    pp: float = 1.0
    pt: float = 1.0
    ppl: float = 1.0
    align_divisor: float = 2.0

    def __post_init__(self) -> None:
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValueError(f"weight {f.name} must be a number, got {v!r}")
            if v < 0:
                raise ValueError(f"weight {f.name} must be >= 0, got {v}")
        if self.align_divisor <= 0:
            raise ValueError("align_divisor must be > 0")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float]) -> "ScoreWeights":
        names = {f.name for f in fields(cls)}
        unknown = set(mapping) - names
        if unknown:
            raise ValueError(f"unknown weight keys: {', '.join(sorted(unknown))}")
        return cls(**{k: float(v) for k, v in mapping.items()})

    @classmethod
    def from_file(cls, path: str | os.PathLike[str]) -> "ScoreWeights":
        """Read a flat key-value file (``key = value``, ``#`` comments)."""
        values: dict[str, float] = {}
        with open(path, encoding="utf-8-sig") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                for sep in ("=", ":"):
                    if sep in line:
                        key, _, val = line.partition(sep)
                        break
                else:
                    raise ValueError(f"{path}: line {lineno}: expected 'key = value'")
                try:
                    values[key.strip()] = float(val.strip())
                except ValueError:
                    raise ValueError(f"{path}: line {lineno}: bad number {val.strip()!r}") from None
        return cls.from_mapping(values)


DEFAULT_WEIGHTS = ScoreWeights()


@dataclass(frozen=True, slots=True)
class ScoreBreakdown:
    """All four sub-scores plus the combined total.

    When ``gated`` is true the pair was rejected by the align gate (or
    the window lacked a pinyin reading) and only ``align_score`` is
    filled in.
    """

    align_score: float
    pinyin_score: float | None
    pinyin_word_score: float | None
    tone_score: float | None
    total: float | None
    gated: bool


def _require_same_length(seq: Sequence, idiom: Sequence) -> int:
    if len(seq) != len(idiom):
        raise ValueError(f"length mismatch: {len(seq)} vs {len(idiom)}")
    if not seq:
        raise ValueError("sequences must be non-empty")
    return len(seq)


def align_score(seq_chars: str, idiom_chars: str, weights: ScoreWeights = DEFAULT_WEIGHTS) -> float:
    """``a`` per position (over the shorter input) where the characters agree."""
    if not seq_chars or not idiom_chars:
        raise ValueError("sequences must be non-empty")
    matches = sum(1 for x, y in zip(seq_chars, idiom_chars) if x == y)
    return weights.a * matches


def align_gate(seq_chars: str, idiom_chars: str, weights: ScoreWeights = DEFAULT_WEIGHTS) -> bool:
    """Admission gate: align score must reach ``floor(shorter_len / align_divisor)``."""
    shorter = min(len(seq_chars), len(idiom_chars))
    return align_score(seq_chars, idiom_chars, weights) >= int(shorter / weights.align_divisor)


def pinyin_score(
    seq_syll: Sequence[PinyinSyllable],
    idiom_syll: Sequence[PinyinSyllable],
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> float:
    """``b`` per agreeing letter, comparing bases position-by-position.

    Within each syllable pair, letters are compared index-by-index up
    to the shorter base's length.
    """
    _require_same_length(seq_syll, idiom_syll)
    matches = 0
    for s, d in zip(seq_syll, idiom_syll):
        matches += sum(1 for x, y in zip(s.base, d.base) if x == y)
    return weights.b * matches


def pinyin_word_score(
    seq_syll: Sequence[PinyinSyllable],
    idiom_syll: Sequence[PinyinSyllable],
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> float:
    """``+c`` per position whose whole base matches, ``-c`` otherwise.

    Tone is deliberately not part of this comparison.
    """
    n = _require_same_length(seq_syll, idiom_syll)
    equal = sum(1 for s, d in zip(seq_syll, idiom_syll) if s.base == d.base)
    return weights.c * equal - weights.c * (n - equal)


def tone_score(
    seq_syll: Sequence[PinyinSyllable],
    idiom_syll: Sequence[PinyinSyllable],
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> float:
    """Mean squared tone difference scaled by ``p``; 0 when tones agree."""
    n = _require_same_length(seq_syll, idiom_syll)
    sq = sum((s.tone - d.tone) ** 2 for s, d in zip(seq_syll, idiom_syll))
    return weights.p * sq / n


def total_score(
    pinyin: float,
    tone: float,
    word: float,
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> float:
    """Combined score: ``pinyin*pp - tone*pt + word*ppl``.

    The align score is not part of the total; it acts only through the
    admission gate.
    """
    return pinyin * weights.pp - tone * weights.pt + word * weights.ppl


def score_pair(
    seq_chars: str,
    seq_syll: Sequence[PinyinSyllable | None],
    idiom: IdiomEntry,
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> ScoreBreakdown:
    """Score a window against one idiom of the same length.

    The align gate runs first; a rejected pair (or a window with a
    missing pinyin reading) comes back with ``gated=True`` and no
    total. Raises ValueError when the window length differs from the
    idiom length.
    """
    if len(seq_chars) != len(idiom.word) or len(seq_syll) != len(idiom.word):
        raise ValueError(
            f"window length {len(seq_chars)}/{len(seq_syll)} vs idiom length {len(idiom.word)}"
        )
    align = align_score(seq_chars, idiom.word, weights)
    if any(s is None for s in seq_syll) or not align_gate(seq_chars, idiom.word, weights):
        return ScoreBreakdown(align, None, None, None, None, gated=True)
    syll = [s for s in seq_syll if s is not None]
    ps = pinyin_score(syll, idiom.syllables, weights)
    ws = pinyin_word_score(syll, idiom.syllables, weights)
    ts = tone_score(syll, idiom.syllables, weights)
    return ScoreBreakdown(align, ps, ws, ts, total_score(ps, ts, ws, weights), gated=False)


def self_score(idiom: IdiomEntry, weights: ScoreWeights = DEFAULT_WEIGHTS) -> float:
    """An idiom's score against itself, the maximum any window can reach.

    Computed directly from the sub-scores; the admission gate does not
    apply to a reference value.
    """
    ps = pinyin_score(idiom.syllables, idiom.syllables, weights)
    ws = pinyin_word_score(idiom.syllables, idiom.syllables, weights)
    ts = tone_score(idiom.syllables, idiom.syllables, weights)
    return total_score(ps, ts, ws, weights)


# Codepoint matrices per (dict, length), used to evaluate the align gate
# against a whole length class at once. Keyed weakly so dictionaries can
# be garbage collected.
_MATRIX_CACHE: "weakref.WeakKeyDictionary[IdiomDict, dict[int, np.ndarray]]" = (
    weakref.WeakKeyDictionary()
)


def _char_matrix(idiom_dict: IdiomDict, n: int) -> np.ndarray:
    per_dict = _MATRIX_CACHE.setdefault(idiom_dict, {})
    matrix = per_dict.get(n)
    if matrix is None:
        entries = idiom_dict.entries_of_length(n)
        matrix = np.array([[ord(c) for c in e.word] for e in entries], dtype=np.int32)
        per_dict[n] = matrix
    return matrix


def best_match(
    seq_chars: str,
    seq_syll: Sequence[PinyinSyllable | None],
    idiom_dict: IdiomDict,
    weights: ScoreWeights = DEFAULT_WEIGHTS,
) -> tuple[IdiomEntry, ScoreBreakdown] | None:
    """Highest-scoring idiom for the window, or None when all are gated.

    Only idioms with the window's character count are considered. Ties
    keep the earliest entry in dictionary order. The align gate is
    evaluated for the whole length class in one vectorized pass; the
    survivors are scored in dictionary order, so the result is
    identical to a sequential scan.
    """
    n = len(seq_chars)
    if n == 0 or len(seq_syll) != n or any(s is None for s in seq_syll):
        return None
    entries = idiom_dict.entries_of_length(n)
    if not entries:
        return None
    codes = _char_matrix(idiom_dict, n)
    window = np.array([ord(c) for c in seq_chars], dtype=np.int32)
    counts = (codes == window).sum(axis=1)
    threshold = int(n / weights.align_divisor)
    survivors = np.flatnonzero(weights.a * counts >= threshold)
    best: tuple[IdiomEntry, ScoreBreakdown] | None = None
    for i in survivors:
        entry = entries[i]
        br = score_pair(seq_chars, seq_syll, entry, weights)
        if br.gated or br.total is None:
            continue
        if best is None or br.total > best[1].total:
            best = (entry, br)
    return best
