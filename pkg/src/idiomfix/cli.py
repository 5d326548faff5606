"""Command-line front end.

Commands: build-dict, correct, score, dedupe, trim-wav, bench.
Output files are written atomically (temp file + rename). Text inputs
may carry a UTF-8 BOM; it is stripped.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import data as _data
from .audio import TrimSpec, trim_wav
from .bench import parse_suite_config, run_suite
from .corrector import CorrectionConfig, correct_transcript, dedupe_adjacent
from .dictionary import IdiomEntry, build_dict, deserialize, read_raw_records, serialize
from .pinyin import load_table
from .scoring import ScoreWeights, score_pair
from .transcripts import emit_json, emit_text, parse_plain_text, parse_transcript_json


def _write_atomic(path: str | os.PathLike[str], payload: bytes) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_table(args):
    return load_table(args.table if args.table else _data.default_table_path())

def _load_dict(args):
    path = args.dict if args.dict else _data.default_dict_path()
    with open(path, "rb") as fh:
        return deserialize(fh.read())

def _load_weights(args) -> ScoreWeights:
    return ScoreWeights.from_file(args.weights) if args.weights else ScoreWeights()


def cmd_build_dict(args) -> int:
    table = _load_table(args) if args.mode == "generate" else None
    records, dropped = read_raw_records(Path(args.input).read_bytes())
    built, stats = build_dict(records, table, source_mode=args.mode)
    _write_atomic(args.out, serialize(built))
    print(f"built {stats.built} entries, skipped {stats.skipped + dropped}, "
          f"duplicates {stats.duplicates} -> {args.out}")
    return 0


def cmd_correct(args) -> int:
    table = _load_table(args)
    idioms = _load_dict(args)
    config = CorrectionConfig(
        window_len=args.window_len,
        weights=_load_weights(args),
        threshold_ratio=args.threshold_ratio,
        min_absolute=args.min_absolute,
    )
    raw = Path(args.input).read_bytes()
    segments = parse_transcript_json(raw) if args.format == "json" else parse_plain_text(raw)
    corrected, corrections = correct_transcript(segments, idioms, table, config)
    payload = (
        emit_json(corrected, corrections) if args.format == "json" else emit_text(corrected)
    )
    if args.out:
        _write_atomic(args.out, payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    print(f"{len(corrections)} correction{'s' if len(corrections) != 1 else ''}")
    return 0


def cmd_score(args) -> int:
    table = _load_table(args)
    idioms = _load_dict(args)
    weights = _load_weights(args)
    entry = idioms.get(args.idiom)
    if entry is None:
        readings = table.sentence_pinyin(args.idiom)
        if not args.idiom or any(s is None for s in readings):
            raise ValueError(f"cannot derive pinyin for idiom {args.idiom!r}")
        entry = IdiomEntry(args.idiom, tuple(readings))
    breakdown = score_pair(args.sequence, table.sentence_pinyin(args.sequence), entry, weights)
    print(f"align_score: {breakdown.align_score}")
    if breakdown.gated:
        print("gated: true")
    else:
        print(f"pinyin_score: {breakdown.pinyin_score}")
        print(f"pinyin_word_score: {breakdown.pinyin_word_score}")
        print(f"tone_score: {breakdown.tone_score}")
        print(f"total: {breakdown.total}")
        print("gated: false")
    return 0


def cmd_dedupe(args) -> int:
    raw = Path(args.input).read_bytes()
    if args.format == "json":
        segments = parse_transcript_json(raw)
        texts = [s.text for s in segments]
    else:
        texts = [ln for ln in raw.decode("utf-8-sig").splitlines() if ln.strip()]
    for k in range(len(texts) - 1):
        _, texts[k + 1] = dedupe_adjacent(texts[k], texts[k + 1])
    if args.format == "json":
        from dataclasses import replace as _replace

        segments = [_replace(s, text=t) for s, t in zip(segments, texts)]
        payload = emit_json(segments)
    else:
        payload = "".join(t + "\n" for t in texts).encode("utf-8")
    if args.out:
        _write_atomic(args.out, payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return 0


def cmd_trim_wav(args) -> int:
    report = trim_wav(args.input, args.out, TrimSpec(args.left_ms, args.right_ms))
    print(f"{report.input_ms:.1f} ms -> {report.output_ms:.1f} ms "
          f"({report.frames_removed} frames removed)")
    return 0


def cmd_bench(args) -> int:
    table = _load_table(args)
    idioms = _load_dict(args)
    specs, ids = parse_suite_config(
        Path(args.suite).read_text(encoding="utf-8-sig"), default_seed=args.seed
    )
    report = run_suite(idioms, table, specs, ids, _load_weights(args))
    csv_text = report.to_csv()
    if args.out:
        _write_atomic(args.out, csv_text.encode("utf-8"))
    else:
        sys.stdout.write(csv_text)
    for err in report.errors:
        print(f"error: {err}", file=sys.stderr)
    print(f"{len(report.rows)} group{'s' if len(report.rows) != 1 else ''}, "
          f"{len(report.errors)} error{'s' if len(report.errors) != 1 else ''}")
    return 0


def _add_table_dict_weights(parser, dict_too=True):
    parser.add_argument("--table", help="pinyin table TSV (default: bundled)")
    if dict_too:
        parser.add_argument("--dict", help="idiom dictionary JSON (default: bundled)")
    parser.add_argument("--weights", help="scoring weights file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idiomfix",
        description="Repair mis-transcribed Chinese idioms with pinyin similarity matching.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-dict", help="convert a raw idiom dataset to dictionary JSON")
    p.add_argument("input", help="raw idiom dataset JSON")
    p.add_argument("--out", required=True)
    p.add_argument("--table", help="pinyin table TSV (default: bundled)")
    p.add_argument("--mode", choices=("generate", "dataset-field"), default="generate")
    p.set_defaults(func=cmd_build_dict)

    p = sub.add_parser("correct", help="correct a transcript or plain-text file")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.add_argument("--threshold-ratio", type=float, default=0.55)
    p.add_argument("--min-absolute", type=float, default=0.0)
    p.add_argument("--window-len", type=int, default=4)
    _add_table_dict_weights(p)
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("score", help="print the score breakdown for one window/idiom pair")
    p.add_argument("sequence", help="character sequence from the text")
    p.add_argument("idiom", help="dictionary idiom (word form)")
    _add_table_dict_weights(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("dedupe", help="remove overlap between consecutive lines or segments")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dedupe)

    p = sub.add_parser("trim-wav", help="cut a span from both ends of a PCM WAV file")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--left-ms", type=int, required=True)
    p.add_argument("--right-ms", type=int, required=True)
    p.set_defaults(func=cmd_trim_wav)

    p = sub.add_parser("bench", help="run mutation benchmark groups from a suite file")
    p.add_argument("suite", help="suite config: idiom ids and kind=/indices=/seed= lines")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0, help="default seed for specs without one")
    _add_table_dict_weights(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
