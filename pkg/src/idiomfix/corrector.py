"""Sliding-window idiom correction and cross-segment redundancy removal.

A fixed-length window slides over each sentence one character at a
time; every window is matched against the same-length idioms and a
match is accepted when its score clears a fraction of the idiom's
self-score. Overlapping acceptances are resolved deterministically and
replacements preserve the text length exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Sequence

from .dictionary import IdiomDict, IdiomEntry
from .pinyin import PinyinSyllable, PinyinTable
from .scoring import DEFAULT_WEIGHTS, ScoreBreakdown, ScoreWeights, best_match, self_score

if TYPE_CHECKING:
    from .transcripts import TranscriptSegment

__all__ = [
    "CandidateWindow",
    "CorrectionConfig",
    "Correction",
    "scan_sentence",
    "correct_sentence",
    "dedupe_adjacent",
    "correct_transcript",
]


@dataclass(frozen=True, slots=True)
class CandidateWindow:
    """One window of the sentence: start offset, characters, readings."""

    start_index: int
    chars: str
    syllables: tuple[PinyinSyllable | None, ...]


@dataclass(frozen=True, slots=True)
class CorrectionConfig:
    """Window length, scoring weights, and acceptance thresholds."""

    window_len: int = 4
    weights: ScoreWeights = DEFAULT_WEIGHTS
    threshold_ratio: float = 0.55
    min_absolute: float = 0.0

    def __post_init__(self) -> None:
        if self.window_len < 2:
            raise ValueError(f"window_len must be >= 2, got {self.window_len}")
        if not 0.0 <= self.threshold_ratio <= 1.0:
            raise ValueError(f"threshold_ratio must be in [0, 1], got {self.threshold_ratio}")


@dataclass(frozen=True, slots=True)
class Correction:
    """An accepted replacement of one window with a dictionary idiom."""

    start_index: int
    original: str
    replacement: str
    score: float
    idiom_self_score: float

    def __post_init__(self) -> None:
        if len(self.original) != len(self.replacement):
            raise ValueError("original and replacement must have equal length")


Match = tuple[IdiomEntry, ScoreBreakdown]


def scan_sentence(
    text: str,
    idiom_dict: IdiomDict,
    table: PinyinTable,
    config: CorrectionConfig = CorrectionConfig(),
) -> list[tuple[CandidateWindow, Match | None]]:
    """All windows of the sentence with their best dictionary match.

    Yields one window per start index 0..len(text)-n. Windows containing
    a character without a pinyin reading carry no match.
    """
    n = config.window_len
    syllables = table.sentence_pinyin(text)
    out: list[tuple[CandidateWindow, Match | None]] = []
    for i in range(len(text) - n + 1):
        window = CandidateWindow(i, text[i : i + n], tuple(syllables[i : i + n]))
        match = None
        if all(s is not None for s in window.syllables):
            match = best_match(window.chars, window.syllables, idiom_dict, config.weights)
        out.append((window, match))
    return out


def correct_sentence(
    text: str,
    idiom_dict: IdiomDict,
    table: PinyinTable,
    config: CorrectionConfig = CorrectionConfig(),
) -> tuple[str, list[Correction]]:
    """Correct one sentence; returns the new text plus correction records.

    A match is accepted when its score reaches
    ``threshold_ratio * idiom_self_score`` and ``min_absolute``.
    Windows that already spell the matched idiom produce no record but
    still claim their span, so an idiom present in the input is never
    damaged by a weaker overlapping candidate and the operation is
    idempotent. Remaining overlaps resolve by descending score, then
    leftmost start. The corrected text has the same character count as
    the input.
    """
    accepted: list[tuple[bool, float, int, CandidateWindow, IdiomEntry]] = []
    for window, match in scan_sentence(text, idiom_dict, table, config):
        if match is None:
            continue
        entry, breakdown = match
        assert breakdown.total is not None
        own = self_score(entry, config.weights)
        if breakdown.total < config.threshold_ratio * own:
            continue
        if breakdown.total < config.min_absolute:
            continue
        exact = window.chars == entry.word
        accepted.append((exact, breakdown.total, window.start_index, window, entry))

    # Exact spans claim first; then stronger scores, then leftmost.
    accepted.sort(key=lambda item: (not item[0], -item[1], item[2]))
    claimed: list[tuple[int, int]] = []
    corrections: list[Correction] = []
    n = config.window_len
    for exact, total, start, window, entry in accepted:
        span = (start, start + n)
        if any(span[0] < hi and lo < span[1] for lo, hi in claimed):
            continue
        claimed.append(span)
        if not exact:
            corrections.append(
                Correction(start, window.chars, entry.word, total, self_score(entry, config.weights))
            )

    corrections.sort(key=lambda c: c.start_index)
    chars = list(text)
    for corr in reversed(corrections):
        chars[corr.start_index : corr.start_index + n] = corr.replacement
    return "".join(chars), corrections


def _token_spans(text: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start()) for m in re.finditer(r"\S+", text)]


def dedupe_adjacent(first: str, second: str) -> tuple[str, str]:
    """Remove from ``second`` the overlap it shares with the end of ``first``.

    The overlap is the longest token run that is both a suffix of
    ``first`` and a prefix of ``second``; tokens are whitespace-delimited
    words when both texts contain whitespace, single characters
    otherwise. Removal repeats until no overlap remains, so the
    returned pair never duplicates tokens across the join. ``first`` is
    returned unchanged.
    """
    word_mode = any(c.isspace() for c in first) and any(c.isspace() for c in second)
    while first and second:
        if word_mode:
            f_tokens = first.split()
            s_spans = _token_spans(second)
            s_tokens = [t for t, _ in s_spans]
            cut = 0
            for k in range(min(len(f_tokens), len(s_tokens)), 0, -1):
                if f_tokens[-k:] == s_tokens[:k]:
                    cut = k
                    break
            if cut == 0:
                break
            second = second[s_spans[cut][1] :] if cut < len(s_spans) else ""
        else:
            cut = 0
            for k in range(min(len(first), len(second)), 0, -1):
                if first[-k:] == second[:k]:
                    cut = k
                    break
            if cut == 0:
                break
            second = second[cut:]
    return first, second


def correct_transcript(
    segments: Sequence["TranscriptSegment"],
    idiom_dict: IdiomDict,
    table: PinyinTable,
    config: CorrectionConfig = CorrectionConfig(),
) -> tuple[list["TranscriptSegment"], list[tuple[int, Correction]]]:
    """Dedupe adjacent segments in order, then correct each one.

    Returns the rewritten segments (timing untouched) and all
    corrections as (segment position, Correction) pairs.
    """
    texts = [seg.text for seg in segments]
    for k in range(len(texts) - 1):
        _, texts[k + 1] = dedupe_adjacent(texts[k], texts[k + 1])
    out: list[TranscriptSegment] = []
    all_corrections: list[tuple[int, Correction]] = []
    for pos, (seg, text) in enumerate(zip(segments, texts)):
        corrected, corrections = correct_sentence(text, idiom_dict, table, config)
        out.append(replace(seg, text=corrected))
        all_corrections.extend((pos, c) for c in corrections)
    return out, all_corrections
