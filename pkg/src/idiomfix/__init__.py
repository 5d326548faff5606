"""Pinyin-similarity correction of mis-transcribed Chinese idioms.

The package detects character windows in recognizer output that sound
like a dictionary idiom but are written with the wrong characters or
tones, and replaces them with the canonical form. It also ships the
surrounding pipeline utilities: transcript parsing, cross-segment
overlap removal, WAV end-trimming, and a mutation benchmark.
"""

from .audio import TrimReport, TrimSpec, trim_wav
from .bench import GroupResult, MutationSpec, mutate_idiom, run_group, run_suite
from .corrector import (
    CandidateWindow,
    Correction,
    CorrectionConfig,
    correct_sentence,
    correct_transcript,
    dedupe_adjacent,
    scan_sentence,
)
from .dictionary import (
    BuildStats,
    IdiomDict,
    IdiomEntry,
    RawIdiomRecord,
    build_dict,
    deserialize,
    read_raw_records,
    serialize,
)
from .estimator import IdiomCorrector
from .pinyin import PinyinSyllable, PinyinTable, load_table, parse_syllable
from .scoring import (
    DEFAULT_WEIGHTS,
    ScoreBreakdown,
    ScoreWeights,
    align_gate,
    align_score,
    best_match,
    pinyin_score,
    pinyin_word_score,
    score_pair,
    self_score,
    tone_score,
    total_score,
)
from .transcripts import (
    TranscriptSegment,
    emit_json,
    emit_text,
    parse_plain_text,
    parse_transcript_json,
)

__version__ = "0.1.0"

__all__ = [
    "BuildStats",
    "CandidateWindow",
    "Correction",
    "CorrectionConfig",
    "DEFAULT_WEIGHTS",
    "GroupResult",
    "IdiomCorrector",
    "IdiomDict",
    "IdiomEntry",
    "MutationSpec",
    "PinyinSyllable",
    "PinyinTable",
    "RawIdiomRecord",
    "ScoreBreakdown",
    "ScoreWeights",
    "TranscriptSegment",
    "TrimReport",
    "TrimSpec",
    "align_gate",
    "align_score",
    "best_match",
    "build_dict",
    "correct_sentence",
    "correct_transcript",
    "dedupe_adjacent",
    "deserialize",
    "emit_json",
    "emit_text",
    "load_table",
    "mutate_idiom",
    "parse_plain_text",
    "parse_syllable",
    "parse_transcript_json",
    "pinyin_score",
    "pinyin_word_score",
    "read_raw_records",
    "run_group",
    "run_suite",
    "scan_sentence",
    "score_pair",
    "self_score",
    "serialize",
    "tone_score",
    "total_score",
    "trim_wav",
]
