"""WAV end-trimming: drop a fixed span from both ends of a PCM file.

Only canonical RIFF/WAVE with uncompressed integer PCM (format tag 1)
is supported. The fmt chunk is copied to the output byte-for-byte, so
sample rate, channel count, and bit depth are preserved exactly.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass

__all__ = ["TrimSpec", "TrimReport", "trim_wav"]

WAVE_FORMAT_PCM = 1


@dataclass(frozen=True, slots=True)
class TrimSpec:
    """Milliseconds to drop from the left and right ends."""

    left_ms: int
    right_ms: int

    def __post_init__(self) -> None:
        if self.left_ms < 0 or self.right_ms < 0:
            raise ValueError("trim lengths must be >= 0")


@dataclass(frozen=True, slots=True)
class TrimReport:
    """Input and output durations in milliseconds."""

    input_ms: float
    output_ms: float
    frames_removed: int


def _read_chunks(data: bytes, path: str) -> dict[bytes, bytes]:
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise ValueError(f"{path}: not a RIFF/WAVE file")
    chunks: dict[bytes, bytes] = {}
    pos = 12
    while pos + 8 <= len(data):
        cid = data[pos : pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + size]
        if len(body) < size:
            raise ValueError(f"{path}: truncated {cid!r} chunk")
        chunks.setdefault(cid, body)
        pos += 8 + size + (size & 1)
    return chunks


def trim_wav(
    input_path: str | os.PathLike[str],
    output_path: str | os.PathLike[str],
    spec: TrimSpec,
) -> TrimReport:
    """Write a copy of the input with both ends removed.

    ``floor(left_ms * rate / 1000)`` leading frames and
    ``floor(right_ms * rate / 1000)`` trailing frames are dropped.
    Raises ValueError for non-PCM or malformed input and when the trim
    meets or exceeds the total duration.
    """
    with open(input_path, "rb") as fh:
        data = fh.read()
    chunks = _read_chunks(data, str(input_path))
    fmt = chunks.get(b"fmt ")
    pcm = chunks.get(b"data")
    if fmt is None or len(fmt) < 16 or pcm is None:
        raise ValueError(f"{input_path}: missing fmt or data chunk")
    tag, channels, rate, _byte_rate, block_align, bits = struct.unpack_from("<HHIIHH", fmt, 0)
    if tag != WAVE_FORMAT_PCM:
        raise ValueError(f"{input_path}: format tag {tag} is not uncompressed PCM")
    frame_size = block_align or channels * (bits // 8)
    if frame_size <= 0 or rate <= 0:
        raise ValueError(f"{input_path}: invalid fmt fields")
    if len(pcm) % frame_size:
        raise ValueError(f"{input_path}: data chunk is not a whole number of frames")
    total_frames = len(pcm) // frame_size

    left_frames = spec.left_ms * rate // 1000
    right_frames = spec.right_ms * rate // 1000
    if left_frames + right_frames >= total_frames:
        raise ValueError(
            f"{input_path}: trim of {spec.left_ms}+{spec.right_ms} ms covers the whole file"
        )
    kept = pcm[left_frames * frame_size : (total_frames - right_frames) * frame_size]

    body = bytearray()
    body += b"WAVE"
    body += b"fmt " + struct.pack("<I", len(fmt)) + fmt
    if len(fmt) & 1:
        body += b"\x00"
    body += b"data" + struct.pack("<I", len(kept)) + kept
    if len(kept) & 1:
        body += b"\x00"
    with open(output_path, "wb") as fh:
        fh.write(b"RIFF" + struct.pack("<I", len(body)) + body)

    return TrimReport(
        input_ms=total_frames * 1000 / rate,
        output_ms=(total_frames - left_frames - right_frames) * 1000 / rate,
        frames_removed=left_frames + right_frames,
    )
