"""Idiom dictionary: build from raw dataset records, query by length, serialize.

The on-disk form is a single JSON object mapping each idiom to a pair of
parallel lists, ``{"<word>": [[<base>...], [<tone>...]]}``, so an entry
carries exactly one syllable per character.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .pinyin import PinyinSyllable, PinyinTable, parse_syllable

__all__ = [
    "RawIdiomRecord",
    "IdiomEntry",
    "IdiomDict",
    "BuildStats",
    "build_dict",
    "read_raw_records",
    "serialize",
    "deserialize",
]


@dataclass(frozen=True, slots=True)
class RawIdiomRecord:
    """One record of the source idiom dataset; only word and pinyin matter here."""

    word: str
    pinyin: str = ""
    derivation: str = ""
    example: str = ""
    explanation: str = ""
    abbreviation: str = ""

    def __post_init__(self) -> None:
        if not self.word:
            raise ValueError("record word must be non-empty")


@dataclass(frozen=True, slots=True)
class IdiomEntry:
    """An idiom plus one syllable per character."""

    word: str
    syllables: tuple[PinyinSyllable, ...]

    def __post_init__(self) -> None:
        if not self.word:
            raise ValueError("idiom word must be non-empty")
        if len(self.syllables) != len(self.word):
            raise ValueError(
                f"{self.word!r}: {len(self.syllables)} syllables for {len(self.word)} characters"
            )


class IdiomDict:
    """Immutable idiom collection indexed by word and by character count."""

    def __init__(self, entries: Iterable[IdiomEntry]):
        self.entries: tuple[IdiomEntry, ...] = tuple(entries)
        self.by_word: dict[str, IdiomEntry] = {}
        by_length: dict[int, list[IdiomEntry]] = {}
        for e in self.entries:
            if e.word in self.by_word:
                raise ValueError(f"duplicate idiom {e.word!r}")
            self.by_word[e.word] = e
            by_length.setdefault(len(e.word), []).append(e)
        self._by_length: dict[int, tuple[IdiomEntry, ...]] = {
            n: tuple(es) for n, es in by_length.items()
        }

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.by_word

    def get(self, word: str) -> IdiomEntry | None:
        return self.by_word.get(word)

    def entries_of_length(self, n: int) -> tuple[IdiomEntry, ...]:
        """Entries whose word has exactly ``n`` characters, in insertion order."""
        if n < 1:
            raise ValueError(f"length must be >= 1, got {n}")
        return self._by_length.get(n, ())

    def lengths(self) -> list[int]:
        return sorted(self._by_length)


@dataclass
class BuildStats:
    """Counts from one build_dict run."""

    built: int = 0
    duplicates: int = 0
    skipped_missing_chars: int = 0
    skipped_bad_pinyin: int = 0

    @property
    def skipped(self) -> int:
        return self.skipped_missing_chars + self.skipped_bad_pinyin


def build_dict(
    records: Iterable[RawIdiomRecord],
    table: PinyinTable | None = None,
    source_mode: str = "generate",
) -> tuple[IdiomDict, BuildStats]:
    """Build an IdiomDict from raw records.

    In ``generate`` mode each character's syllable comes from the
    table's default reading; records containing characters the table
    does not know are skipped and counted. In ``dataset-field`` mode
    syllables are parsed from the record's pinyin field (tone digits or
    diacritics); records whose syllable count does not match the
    character count, or whose pinyin does not parse, are skipped and
    counted. Duplicate words keep the first occurrence.
    """
    if source_mode not in ("generate", "dataset-field"):
        raise ValueError(f"unknown source_mode {source_mode!r}")
    if source_mode == "generate" and table is None:
        raise ValueError("generate mode requires a pinyin table")

    stats = BuildStats()
    entries: list[IdiomEntry] = []
    seen: set[str] = set()
    for rec in records:
        if rec.word in seen:
            stats.duplicates += 1
            continue
        if source_mode == "generate":
            assert table is not None
            syls = table.sentence_pinyin(rec.word)
            if any(s is None for s in syls):
                stats.skipped_missing_chars += 1
                continue
            syllables = tuple(s for s in syls if s is not None)
        else:
            try:
                syllables = tuple(parse_syllable(tok) for tok in rec.pinyin.split())
            except ValueError:
                stats.skipped_bad_pinyin += 1
                continue
            if len(syllables) != len(rec.word):
                stats.skipped_bad_pinyin += 1
                continue
        seen.add(rec.word)
        entries.append(IdiomEntry(rec.word, syllables))
        stats.built += 1
    return IdiomDict(entries), stats


_RECORD_FIELDS = ("derivation", "example", "explanation", "pinyin", "word", "abbreviation")


def read_raw_records(data: bytes | str) -> tuple[list[RawIdiomRecord], int]:
    """Parse a raw idiom dataset (JSON array of objects).

    Unknown object fields are ignored; objects without a non-empty
    string ``word`` are dropped. Returns (records, dropped_count).
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    obj = json.loads(data)
    if not isinstance(obj, list):
        raise ValueError("raw idiom dataset must be a JSON array")
    records: list[RawIdiomRecord] = []
    dropped = 0
    for item in obj:
        if not isinstance(item, dict) or not isinstance(item.get("word"), str) or not item["word"]:
            dropped += 1
            continue
        kwargs = {k: item[k] for k in _RECORD_FIELDS if isinstance(item.get(k), str)}
        records.append(RawIdiomRecord(**kwargs))
    return records, dropped


def serialize(idiom_dict: IdiomDict) -> bytes:
    """Serialize to the JSON object form, preserving entry order."""
    payload = {
        e.word: [[s.base for s in e.syllables], [s.tone for s in e.syllables]]
        for e in idiom_dict.entries
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def deserialize(data: bytes | str) -> IdiomDict:
    """Parse the JSON object form back into an IdiomDict.

    Rejects entries whose base or tone list length differs from the
    word's character count, and any base/tone failing syllable rules.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    obj = json.loads(data)
    if not isinstance(obj, dict):
        raise ValueError("idiom dictionary must be a JSON object")
    entries: list[IdiomEntry] = []
    for word, value in obj.items():
        if (
            not isinstance(value, list)
            or len(value) != 2
            or not all(isinstance(part, list) for part in value)
        ):
            raise ValueError(f"{word!r}: value must be [[bases...], [tones...]]")
        bases, tones = value
        if len(bases) != len(word) or len(tones) != len(word):
            raise ValueError(
                f"{word!r}: expected {len(word)} bases and tones, got {len(bases)}/{len(tones)}"
            )
        syllables = []
        for base, tone in zip(bases, tones):
            if not isinstance(base, str) or not isinstance(tone, int):
                raise ValueError(f"{word!r}: bases must be strings and tones integers")
            syllables.append(PinyinSyllable(base, 0 if tone == 5 else tone))
        entries.append(IdiomEntry(word, tuple(syllables)))
    return IdiomDict(entries)
