"""Transcript ingestion and emission.

The JSON form is the common speech-recognition layout:
``{"segments": [{"id": int, "start": seconds, "end": seconds, "text": str}, ...]}``.
Timings are stored internally as integer milliseconds so round-trips
are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .corrector import Correction

__all__ = [
    "TranscriptSegment",
    "parse_transcript_json",
    "parse_plain_text",
    "emit_text",
    "emit_json",
]


@dataclass(frozen=True, slots=True)
class TranscriptSegment:
    """One timed unit of recognizer output."""

    index: int
    start_ms: int
    end_ms: int
    text: str

    def __post_init__(self) -> None:
        if self.start_ms < 0:
            raise ValueError(f"segment {self.index}: start_ms must be >= 0")
        if self.end_ms <= self.start_ms:
            raise ValueError(f"segment {self.index}: end_ms must exceed start_ms")


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8-sig")
    return data.lstrip("﻿")


def parse_transcript_json(data: bytes | str) -> list[TranscriptSegment]:
    """Parse recognizer JSON into segments, converting seconds to ms.

    Rejects missing ``text`` fields and segments whose start times go
    backwards; unknown fields are ignored.
    """
    obj = json.loads(_decode(data))
    if not isinstance(obj, dict) or not isinstance(obj.get("segments"), list):
        raise ValueError("transcript JSON must be an object with a 'segments' array")
    segments: list[TranscriptSegment] = []
    for pos, item in enumerate(obj["segments"]):
        if not isinstance(item, dict):
            raise ValueError(f"segment {pos}: must be an object")
        if not isinstance(item.get("text"), str):
            raise ValueError(f"segment {pos}: missing text field")
        try:
            start_ms = round(float(item.get("start", 0.0)) * 1000)
            end_ms = round(float(item.get("end", 0.0)) * 1000)
        except (TypeError, ValueError):
            raise ValueError(f"segment {pos}: start/end must be numbers") from None
        index = item["id"] if isinstance(item.get("id"), int) else pos
        segments.append(TranscriptSegment(index, start_ms, end_ms, item["text"]))
        if pos and segments[-1].start_ms < segments[-2].start_ms:
            raise ValueError(f"segment {pos}: start times are not monotonic")
    return segments


def parse_plain_text(data: bytes | str) -> list[TranscriptSegment]:
    """One segment per non-blank line, with synthetic one-second timings."""
    text = _decode(data)
    segments: list[TranscriptSegment] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        k = len(segments)
        segments.append(TranscriptSegment(k, k * 1000, (k + 1) * 1000, line))
    return segments


def emit_text(segments: Sequence[TranscriptSegment]) -> bytes:
    """Segment texts, one per line."""
    return "".join(seg.text + "\n" for seg in segments).encode("utf-8")


def emit_json(
    segments: Sequence[TranscriptSegment],
    corrections: Sequence[tuple[int, "Correction"]] = (),
) -> bytes:
    """Transcript JSON plus a corrections array.

    Each correction is reported against the position of its segment in
    the ``segments`` array.
    """
    payload = {
        "segments": [
            {
                "id": seg.index,
                "start": seg.start_ms / 1000,
                "end": seg.end_ms / 1000,
                "text": seg.text,
            }
            for seg in segments
        ],
        "corrections": [
            {
                "segment": pos,
                "start_index": corr.start_index,
                "original": corr.original,
                "replacement": corr.replacement,
                "score": corr.score,
            }
            for pos, corr in corrections
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2).encode("utf-8")
