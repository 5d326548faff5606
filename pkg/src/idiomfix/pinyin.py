"""Character-to-pinyin lookup table with a reverse homophone index.

The table maps each Chinese character to one or more readings, where a
reading is a toneless romanized base plus a tone digit (0 = neutral,
1-4 = the contour tones). The first reading listed for a character is
treated as its default pronunciation.
"""

from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass

__all__ = [
    "PinyinSyllable",
    "PinyinTable",
    "load_table",
    "parse_syllable",
]

# Combining marks produced by NFD decomposition of tone diacritics.
_COMBINING_TONE = {
    "̄": 1,  # macron
    "́": 2,  # acute
    "̌": 3,  # caron
    "̆": 3,  # breve, seen in sloppier datasets
    "̀": 4,  # grave
}
_COMBINING_DIAERESIS = "̈"  # u + diaeresis = the front rounded vowel, stored as "v"


@dataclass(frozen=True, slots=True)
class PinyinSyllable:
    """One romanized syllable: lowercase ASCII base plus tone digit 0-4."""

    base: str
    tone: int

    def __post_init__(self) -> None:
        b = self.base
        if not b or len(b) > 7 or not (b.isascii() and b.isalpha() and b.islower()):
            raise ValueError(f"invalid syllable base {self.base!r}")
        if not isinstance(self.tone, int) or not 0 <= self.tone <= 4:
            raise ValueError(f"invalid tone {self.tone!r} for base {self.base!r}")

    def __str__(self) -> str:
        return f"{self.base}{self.tone}"


def parse_syllable(token: str) -> PinyinSyllable:
    """Parse one pinyin token into a syllable.

    Accepts tone digits ("bu4"), tone-mark diacritics ("bù", "lǜ") and
    bare neutral-tone syllables ("de"). Neutral tone may be written as
    no mark, 0, or 5; the front rounded vowel normalizes to "v".

    Raises ValueError for anything that does not reduce to an ASCII
    letter base plus a tone.
    """
    tok = token.strip().lower()
    if not tok:
        raise ValueError("empty pinyin token")
    tone = 0
    if tok[-1].isdigit():
        tone = int(tok[-1])
        if tone == 5:
            tone = 0
        tok = tok[:-1]
    letters: list[str] = []
    for ch in unicodedata.normalize("NFD", tok):
        if ch in _COMBINING_TONE:
            tone = _COMBINING_TONE[ch]
        elif ch == _COMBINING_DIAERESIS:
            if not letters or letters[-1] != "u":
                raise ValueError(f"cannot parse pinyin token {token!r}")
            letters[-1] = "v"
        elif ch == "ɡ":  # script g, used by some sources
            letters.append("g")
        elif ch.isascii() and ch.isalpha():
            letters.append(ch)
        else:
            raise ValueError(f"cannot parse pinyin token {token!r}")
    return PinyinSyllable("".join(letters), tone)


class PinyinTable:
    """Immutable character-to-readings table.

    Lookups never raise for unknown characters; they return ``None`` so
    that punctuation, Latin letters, and digits flow through untouched.
    """

    def __init__(self, readings: dict[str, list[PinyinSyllable]]):
        self._readings: dict[str, tuple[PinyinSyllable, ...]] = {
            ch: tuple(syls) for ch, syls in readings.items() if syls
        }
        index: dict[tuple[str, int], list[str]] = {}
        for ch, syls in self._readings.items():
            for s in syls:
                index.setdefault((s.base, s.tone), []).append(ch)
        self._homophones: dict[tuple[str, int], tuple[str, ...]] = {
            key: tuple(sorted(chars)) for key, chars in index.items()
        }

    def __len__(self) -> int:
        return len(self._readings)

    def __contains__(self, ch: str) -> bool:
        return ch in self._readings

    def pinyin_of(self, ch: str) -> tuple[PinyinSyllable, ...] | None:
        """All readings of ``ch`` in table order, or None if unknown."""
        return self._readings.get(ch)

    def primary_reading(self, ch: str) -> PinyinSyllable | None:
        """The first-listed (default) reading of ``ch``, or None."""
        syls = self._readings.get(ch)
        return syls[0] if syls else None

    def homophones(self, syllable: PinyinSyllable, exclude: str | None = None) -> list[str]:
        """Characters that have ``syllable`` among their readings.

        ``exclude`` drops one character from the result. Order is by
        ascending codepoint; the list may be empty.
        """
        chars = self._homophones.get((syllable.base, syllable.tone), ())
        return [c for c in chars if c != exclude]

    def sentence_pinyin(self, text: str) -> list[PinyinSyllable | None]:
        """Default reading per character; None for characters not in the table."""
        return [self.primary_reading(ch) for ch in text]


def load_table(path: str | os.PathLike[str]) -> PinyinTable:
    """Load a table from a TSV file of ``<char><TAB><base><tone-digit>`` lines.

    Multiple lines per character are allowed and keep file order (first
    line = default reading). A second field without a trailing digit
    means neutral tone; a trailing 5 also normalizes to 0. Lines that
    are empty or start with ``#`` are skipped. Duplicate
    (char, base, tone) triples are dropped silently.

    Raises ValueError with the offending line number for malformed
    lines, and OSError for I/O failures.
    """
    readings: dict[str, list[PinyinSyllable]] = {}
    seen: set[tuple[str, str, int]] = set()
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}: line {lineno}: expected '<char><TAB><pinyin>'")
            ch, field = parts[0].strip(), parts[1].strip()
            if len(ch) != 1:
                raise ValueError(f"{path}: line {lineno}: first field must be a single character")
            if not field:
                raise ValueError(f"{path}: line {lineno}: empty pinyin field")
            tone = 0
            if field[-1].isdigit():
                tone = int(field[-1])
                if tone == 5:
                    tone = 0
                field = field[:-1]
            try:
                syl = PinyinSyllable(field, tone)
            except ValueError as exc:
                raise ValueError(f"{path}: line {lineno}: {exc}") from None
            key = (ch, syl.base, syl.tone)
            if key in seen:
                continue
            seen.add(key)
            readings.setdefault(ch, []).append(syl)
    return PinyinTable(readings)
