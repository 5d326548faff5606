#!/usr/bin/env python3
"""Regenerate the bundled data files from their upstream sources.

Inputs (see README for how to fetch them):
  * the bundled JS of the npm package ``pinyin`` (character readings as
    ``dict[0x4e2d] = "zhōng,zhòng";`` lines)
  * ``data/3.txt`` of the npm package ``chengyu`` (one idiom record per
    line with pinyin, explanation, derivation, and example fields)

Outputs:
  * src/idiomfix/data/pinyin_table.tsv  - character readings, default first
  * src/idiomfix/data/idioms.json       - built dictionary (generate mode)
  * tests/data/idioms_raw_sample.json   - small raw-format sample for tests

Usage:
  python tools/build_data.py <pinyin.js> <chengyu-3.txt>
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from idiomfix.dictionary import RawIdiomRecord, build_dict, serialize
from idiomfix.pinyin import load_table, parse_syllable

ROOT = Path(__file__).resolve().parent.parent
TABLE_OUT = ROOT / "src" / "idiomfix" / "data" / "pinyin_table.tsv"
DICT_OUT = ROOT / "src" / "idiomfix" / "data" / "idioms.json"
SAMPLE_OUT = ROOT / "tests" / "data" / "idioms_raw_sample.json"

# Idioms that must appear in the sample dataset (used by CLI tests).
SAMPLE_MUST_HAVE = [
    "日出三竿", "触目成诵", "放歌纵酒", "精兵强将", "漫山遍野",
    "迫不及待", "青出于蓝", "人寿年丰", "世外桃源", "五体投地",
]
SAMPLE_EXTRA = 290

DICT_LINE = re.compile(r'dict\[0x([0-9a-fA-F]+)\]\s*=\s*"([^"]*)"')
RECORD_LINE = re.compile(
    r"^\s*(.+?)\s*拼音：(.*?)释义：(.*?)(?:出处：(.*?))?(?:示例：(.*))?$"
)


def build_table(js_path: Path) -> int:
    lines = ["# Character pinyin table: <char><TAB><base><tone-digit>, default reading first."]
    count = 0
    for cp_hex, readings in DICT_LINE.findall(js_path.read_text(encoding="utf-8")):
        ch = chr(int(cp_hex, 16))
        row = []
        for token in readings.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                syl = parse_syllable(token)
            except ValueError:
                continue
            row.append(f"{ch}\t{syl.base}{syl.tone}")
        if row:
            lines.extend(row)
            count += 1
    TABLE_OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return count


def parse_records(txt_path: Path) -> list[dict]:
    records = []
    skipped = 0
    for raw in txt_path.read_text(encoding="utf-8").splitlines():
        if not raw.strip():
            continue
        m = RECORD_LINE.match(raw)
        if not m:
            skipped += 1
            continue
        word, pinyin, explanation, derivation, example = (
            (g or "").strip() for g in m.groups()
        )
        if not word or any(ch.isascii() for ch in word):
            skipped += 1
            continue
        try:
            abbreviation = "".join(parse_syllable(t).base[0] for t in pinyin.split())
        except (ValueError, IndexError):
            abbreviation = ""
        records.append(
            {
                "derivation": derivation,
                "example": example,
                "explanation": explanation,
                "pinyin": pinyin,
                "word": word,
                "abbreviation": abbreviation,
            }
        )
    print(f"parsed {len(records)} records, skipped {skipped} malformed lines")
    return records


def main() -> int:
    js_path, txt_path = Path(sys.argv[1]), Path(sys.argv[2])

    chars = build_table(js_path)
    print(f"wrote {TABLE_OUT} ({chars} characters)")

    records = parse_records(txt_path)
    table = load_table(TABLE_OUT)
    built, stats = build_dict(
        [RawIdiomRecord(**{k: r[k] for k in ("word", "pinyin")}) for r in records],
        table,
        source_mode="generate",
    )
    DICT_OUT.write_bytes(serialize(built))
    print(
        f"wrote {DICT_OUT}: built {stats.built}, skipped {stats.skipped}, "
        f"duplicates {stats.duplicates}"
    )

    by_word = {r["word"]: r for r in records}
    sample = [by_word[w] for w in SAMPLE_MUST_HAVE]
    for r in records:
        if len(sample) >= len(SAMPLE_MUST_HAVE) + SAMPLE_EXTRA:
            break
        if r["word"] not in SAMPLE_MUST_HAVE and len(r["word"]) == 4:
            sample.append(r)
    SAMPLE_OUT.parent.mkdir(parents=True, exist_ok=True)
    SAMPLE_OUT.write_text(
        json.dumps(sample, ensure_ascii=False, indent=1), encoding="utf-8"
    )
    print(f"wrote {SAMPLE_OUT} ({len(sample)} records)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
