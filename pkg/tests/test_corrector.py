import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idiomfix import (
    CorrectionConfig,
    TranscriptSegment,
    correct_sentence,
    correct_transcript,
    dedupe_adjacent,
    scan_sentence,
    self_score,
)

FIG5_FIRST = "This is a text of the special audio, make the"
FIG5_SECOND = "make the redundancy removal."


class TestConfig:
    def test_defaults(self):
        cfg = CorrectionConfig()
        assert cfg.window_len == 4
        assert cfg.threshold_ratio == 0.55
        assert cfg.min_absolute == 0.0

    def test_rejects_short_window(self):
        with pytest.raises(ValueError):
            CorrectionConfig(window_len=1)

    def test_rejects_bad_ratio(self):
        with pytest.raises(ValueError):
            CorrectionConfig(threshold_ratio=1.5)


class TestScanSentence:
    def test_window_count(self, tiny_dict, tiny_table):
        text = "日出三竿迫不及待日出"  # 10 characters
        windows = scan_sentence(text, tiny_dict, tiny_table)
        assert len(windows) == 7
        assert [w.start_index for w, _ in windows] == list(range(7))

    def test_too_short_sentence(self, tiny_dict, tiny_table):
        assert scan_sentence("日出三", tiny_dict, tiny_table) == []

    def test_exact_idiom_window(self, tiny_dict, tiny_table):
        windows = scan_sentence("迫不及待", tiny_dict, tiny_table)
        assert len(windows) == 1
        window, match = windows[0]
        assert match is not None
        entry, br = match
        assert entry.word == "迫不及待"
        assert br.total == self_score(entry)

    def test_unreadable_window_has_no_match(self, tiny_dict, tiny_table):
        windows = scan_sentence("迫不及x待", tiny_dict, tiny_table)
        # windows at 0 and 1 contain 'x'
        assert windows[0][1] is None
        assert windows[1][1] is None

    def test_window_count_property(self, tiny_dict, tiny_table):
        for length in range(0, 12):
            text = "日" * length
            assert len(scan_sentence(text, tiny_dict, tiny_table)) == max(0, length - 3)


class TestCorrectSentence:
    def test_homophone_error_corrected(self, tiny_dict, tiny_table):
        text = "一日出三干三"
        corrected, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert corrected == "一日出三竿三"
        assert len(corrections) == 1
        corr = corrections[0]
        assert (corr.start_index, corr.original, corr.replacement) == (1, "日出三干", "日出三竿")
        assert corr.score == 19.0
        assert corr.idiom_self_score == 19.0

    def test_no_gate_pass_unchanged(self, tiny_dict, tiny_table):
        text = "一乙医衣已亿"
        corrected, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert corrected == text
        assert corrections == []

    def test_exact_idiom_untouched(self, tiny_dict, tiny_table):
        text = "一迫不及待三"
        corrected, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert corrected == text
        assert corrections == []

    def test_length_preserved(self, tiny_dict, tiny_table):
        for text in ["一日出三干三", "破不及待", "日出三杆迫不及待"]:
            corrected, _ = correct_sentence(text, tiny_dict, tiny_table)
            assert len(corrected) == len(text)

    def test_overlap_resolved_by_score(self, tiny_dict, tiny_table):
        # [破不及待] scores 17 (homophone of the idiom), [待不及待] scores
        # 11; they overlap, so only the stronger one is applied.
        text = "破不及待不及待"
        corrected, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert corrected == "迫不及待不及待"
        assert len(corrections) == 1
        assert corrections[0].start_index == 0

    def test_exact_span_blocks_weaker_overlap(self, tiny_dict, tiny_table):
        # [迫不及待] is already correct; the overlapping candidate
        # [待不及待] must not damage it.
        text = "迫不及待不及待"
        corrected, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert corrected == text
        assert corrections == []

    def test_idempotent(self, tiny_dict, tiny_table):
        texts = [
            "一日出三干三",
            "破不及待不及待",
            "迫不及待不及待",
            "日出三杆迫不及待",
            "试外桃源世外桃源",
        ]
        for text in texts:
            once, _ = correct_sentence(text, tiny_dict, tiny_table)
            twice, again = correct_sentence(once, tiny_dict, tiny_table)
            assert twice == once
            assert again == []

    def test_corrections_never_overlap(self, tiny_dict, tiny_table):
        text = "破不及待日出三干"
        _, corrections = correct_sentence(text, tiny_dict, tiny_table)
        assert len(corrections) == 2
        spans = sorted((c.start_index, c.start_index + 4) for c in corrections)
        for (_, hi), (lo, _) in zip(spans, spans[1:]):
            assert lo >= hi

    def test_min_absolute_floor(self, tiny_dict, tiny_table):
        cfg = CorrectionConfig(min_absolute=18.0)
        corrected, corrections = correct_sentence("破不及待", tiny_dict, tiny_table, cfg)
        assert corrected == "破不及待" and corrections == []
        corrected, corrections = correct_sentence("日出三干", tiny_dict, tiny_table, cfg)
        assert corrected == "日出三竿" and len(corrections) == 1

    def test_threshold_ratio(self, tiny_dict, tiny_table):
        # a two-homophone swap still scores at self level; tone-free
        # partial overlap [待不及待] = 11/17 ≈ 0.65 passes at 0.55 but
        # not at 0.7
        loose = CorrectionConfig(threshold_ratio=0.55)
        strict = CorrectionConfig(threshold_ratio=0.7)
        text = "一待不及待一"
        corrected_loose, corr_loose = correct_sentence(text, tiny_dict, tiny_table, loose)
        corrected_strict, corr_strict = correct_sentence(text, tiny_dict, tiny_table, strict)
        assert corrected_loose == "一迫不及待一" and len(corr_loose) == 1
        assert corrected_strict == text and corr_strict == []


class TestDedupeAdjacent:
    def test_fig5_golden(self):
        first, second = dedupe_adjacent(FIG5_FIRST, FIG5_SECOND)
        assert first == FIG5_FIRST
        assert second == "redundancy removal."

    def test_disjoint_unchanged(self):
        assert dedupe_adjacent("hello there", "general kenobi") == (
            "hello there",
            "general kenobi",
        )

    def test_full_copy_empties_second(self):
        assert dedupe_adjacent("same text", "same text") == ("same text", "")
        assert dedupe_adjacent("同样的话", "同样的话") == ("同样的话", "")

    def test_character_mode_for_chinese(self):
        first, second = dedupe_adjacent("今天天气迫不及待", "迫不及待真的")
        assert (first, second) == ("今天天气迫不及待", "真的")

    def test_longest_overlap_wins(self):
        first, second = dedupe_adjacent("a b c a b", "a b c d")
        # suffix "a b" matches prefix "a b", but not "c a b" vs "a b c"
        assert second == "c d"

    def test_no_residual_boundary_overlap(self):
        # after one removal a fresh overlap can appear; it must be gone too
        first, second = dedupe_adjacent("x a", "a x a")
        assert first + second == "x a"

    @given(
        st.lists(st.sampled_from("abcd"), max_size=6),
        st.lists(st.sampled_from("abcd"), max_size=6),
        st.lists(st.sampled_from("abcd"), max_size=6),
    )
    @settings(max_examples=200)
    def test_char_mode_fixpoint(self, a, overlap, b):
        first = "".join(a + overlap)
        second = "".join(overlap + b)
        f, s = dedupe_adjacent(first, second)
        assert f == first
        # only removal from the front of second
        assert s == "" or second.endswith(s)
        # no suffix of first remains a prefix of the result
        for k in range(1, min(len(first), len(s)) + 1):
            assert first[-k:] != s[:k]

    @given(
        st.lists(st.sampled_from(["aa", "bb", "cc"]), max_size=4),
        st.lists(st.sampled_from(["aa", "bb", "cc"]), max_size=4),
        st.lists(st.sampled_from(["aa", "bb", "cc"]), max_size=4),
    )
    @settings(max_examples=200)
    def test_word_mode_fixpoint(self, a, overlap, b):
        first = " ".join(a + overlap) or "zz"
        second = " ".join(overlap + b) or "zz"
        f, s = dedupe_adjacent(first, second)
        assert f == first
        if " " in first and " " in second:
            f_tokens, s_tokens = f.split(), s.split()
            for k in range(1, min(len(f_tokens), len(s_tokens)) + 1):
                assert f_tokens[-k:] != s_tokens[:k]
        else:
            # single-token inputs fall back to character tokens
            for k in range(1, min(len(f), len(s)) + 1):
                assert f[-k:] != s[:k]


def seg(index, start_ms, end_ms, text):
    return TranscriptSegment(index, start_ms, end_ms, text)


class TestCorrectTranscript:
    def test_dedupe_then_correct(self, tiny_dict, tiny_table):
        segments = [
            seg(0, 0, 1000, "一日出三干三"),
            seg(1, 900, 2000, "干三迫不及待"),
        ]
        out, corrections = correct_transcript(segments, tiny_dict, tiny_table)
        assert out[0].text == "一日出三竿三"
        assert out[1].text == "迫不及待"
        assert [(pos, c.original) for pos, c in corrections] == [(0, "日出三干")]
        assert (out[0].start_ms, out[0].end_ms) == (0, 1000)
        assert (out[1].start_ms, out[1].end_ms) == (900, 2000)

    def test_overlapping_clean_segments(self, tiny_dict, tiny_table):
        segments = [
            seg(0, 0, 1000, "今天天气特别好"),
            seg(1, 900, 2000, "特别好所以出门"),
        ]
        out, corrections = correct_transcript(segments, tiny_dict, tiny_table)
        assert out[0].text == "今天天气特别好"
        assert out[1].text == "所以出门"
        assert corrections == []

    def test_empty(self, tiny_dict, tiny_table):
        assert correct_transcript([], tiny_dict, tiny_table) == ([], [])

    def test_single_segment_with_error(self, tiny_dict, tiny_table):
        out, corrections = correct_transcript(
            [seg(0, 0, 500, "破不及待")], tiny_dict, tiny_table
        )
        assert out[0].text == "迫不及待"
        assert len(corrections) == 1 and corrections[0][0] == 0
