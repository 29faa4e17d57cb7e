import itertools
import random
from functools import lru_cache

import pytest

from indic_cls.errors import (
    MissingHypothesisError,
    UndefinedRateError,
    UnknownIdError,
)
from indic_cls.scoring import (
    EditOp,
    EvalReport,
    ReportRow,
    cer,
    edit_distance_alignment,
    render_report,
    report_from_score,
    score_corpus,
    wer,
)
from indic_cls.script import LanguageId


def recursive_edit_distance(ref, hyp):
    """Independent oracle: plain memoized recursion over suffixes."""

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(ref):
            return len(hyp) - j
        if j == len(hyp):
            return len(ref) - i
        best = go(i + 1, j + 1) + (ref[i] != hyp[j])
        best = min(best, go(i + 1, j) + 1, go(i, j + 1) + 1)
        return best

    return go(0, 0)


class TestAlignment:
    def test_identity(self):
        a = edit_distance_alignment(["a", "b", "c"], ["a", "b", "c"])
        assert (a.matches, a.substitutions, a.deletions, a.insertions) == (3, 0, 0, 0)
        assert a.cost == 0

    def test_single_substitution(self):
        a = edit_distance_alignment(["a", "b", "c"], ["a", "x", "c"])
        assert (a.substitutions, a.deletions, a.insertions) == (1, 0, 0)

    def test_insertion_only(self):
        a = edit_distance_alignment([], ["a"])
        assert a.insertions == 1 and a.cost == 1

    def test_steps_cover_both_sequences(self):
        a = edit_distance_alignment(["a", "b"], ["b", "c"])
        ref_indices = [s.ref_index for s in a.steps if s.ref_index is not None]
        hyp_indices = [s.hyp_index for s in a.steps if s.hyp_index is not None]
        assert ref_indices == [0, 1]
        assert hyp_indices == [0, 1]

    def test_tie_break_prefers_match_then_substitute(self):
        # substitution (diagonal) wins over delete+insert at equal cost
        a = edit_distance_alignment(["a"], ["b"])
        assert [s.op for s in a.steps] == [EditOp.SUBSTITUTE]
        # "aa" vs "a": match-then-delete and delete-then-match tie; the
        # backtrace walks from the end and takes the match there
        a = edit_distance_alignment(["a", "a"], ["a"])
        assert [s.op for s in a.steps] == [EditOp.DELETE, EditOp.MATCH]
        assert a.steps == edit_distance_alignment(["a", "a"], ["a"]).steps

    def test_count_identities_fuzz(self):
        rng = random.Random(17)
        for _ in range(500):
            ref = [rng.choice("abc") for _ in range(rng.randint(0, 10))]
            hyp = [rng.choice("abc") for _ in range(rng.randint(0, 10))]
            a = edit_distance_alignment(ref, hyp)
            assert a.substitutions + a.deletions + a.matches == len(ref)
            assert a.substitutions + a.insertions + a.matches == len(hyp)
            assert a.ref_len == len(ref) and a.hyp_len == len(hyp)

    def test_matches_recursive_oracle_small_exhaustive(self):
        # lengths <= 3 over two symbols here; the full gate runs larger
        alphabet = "ab"
        seqs = [
            tuple(s)
            for n in range(4)
            for s in itertools.product(alphabet, repeat=n)
        ]
        for ref in seqs:
            for hyp in seqs:
                assert (
                    edit_distance_alignment(ref, hyp).cost
                    == recursive_edit_distance(ref, hyp)
                )


class TestRates:
    def test_identical(self):
        assert wer("कमल आ", "कमल आ").rate == 0.0

    def test_one_third(self):
        result = wer("a b c", "a x c")
        assert result.rate == pytest.approx(1 / 3)
        assert result.substitutions == 1

    def test_rate_can_exceed_one(self):
        result = wer("a", "x y z")
        assert result.rate == 3.0
        assert result.substitutions == 1 and result.insertions == 2

    def test_empty_ref_nonempty_hyp_undefined(self):
        with pytest.raises(UndefinedRateError):
            wer("", "a")

    def test_both_empty_flagged_zero(self):
        result = wer("", "")
        assert result.rate == 0.0
        assert result.empty_reference

    def test_cer_counts_code_points_without_spaces(self):
        result = cer("क मल", "कमल")
        assert result.rate == 0.0
        result = cer("कमल", "कमर")
        assert result.ref_tokens == 3
        assert result.substitutions == 1

    def test_cer_normalizes_first(self):
        # decomposed and precomposed qa count as the same character
        assert cer("क़", "क़").rate == 0.0


class TestScoreCorpus:
    def test_identical_everything_zero(self):
        refs = {"u1": "क मल", "u2": "आ"}
        score = score_corpus(refs, dict(refs))
        assert score.wer == 0.0 and score.cer == 0.0

    def test_pooled_not_averaged(self):
        score = score_corpus(
            {"u1": "a b", "u2": "c d e f g h i j"},
            {"u1": "a x", "u2": "c d e f g h i j"},
        )
        assert score.wer == 0.1

    def test_unknown_hyp_id(self):
        with pytest.raises(UnknownIdError):
            score_corpus({"u1": "a"}, {"ux": "a"})

    def test_missing_hyp_as_deletions(self):
        score = score_corpus({"u1": "a b c"}, {})
        assert score.word.deletions == 3
        assert score.wer == 1.0

    def test_missing_hyp_error_policy(self):
        with pytest.raises(MissingHypothesisError):
            score_corpus({"u1": "a"}, {}, missing_hyp="error")

    def test_per_language_buckets(self):
        refs = {"h1": "a b", "o1": "c d e f"}
        hyps = {"h1": "a x", "o1": "c d e f"}
        langs = {"h1": LanguageId.HINDI, "o1": LanguageId.ODIA}
        score = score_corpus(refs, hyps, langs)
        assert score.by_lang[LanguageId.HINDI].wer == 0.5
        assert score.by_lang[LanguageId.ODIA].wer == 0.0
        assert score.wer == pytest.approx(1 / 6)

    def test_normalize_toggle(self):
        refs = {"u": "क़"}
        hyps = {"u": "क़"}
        assert score_corpus(refs, hyps).wer == 1.0
        assert score_corpus(refs, hyps, apply_normalize=True).wer == 0.0

    def test_report_from_score(self):
        refs = {"h1": "a b", "o1": "c d"}
        hyps = {"h1": "a x", "o1": "c d"}
        langs = {"h1": LanguageId.HINDI, "o1": LanguageId.ODIA}
        report = report_from_score(
            score_corpus(refs, hyps, langs), "demo", include_cer=True
        )
        rendered = render_report(report)
        assert "overall" in rendered and "hindi" in rendered
        assert "demo (CER)" in rendered


class TestRenderReport:
    def fixture_report(self):
        languages = ("Hindi", "Gujarati", "Marathi", "Bengali", "Odia")
        return EvalReport(
            languages,
            (
                ReportRow(
                    "Multilingual CLS with LID",
                    dict(zip(languages, (14.2, 22.8, 43.9, 19.5, 27.0))),
                ),
            ),
        )

    def test_one_decimal_cells(self):
        table = render_report(self.fixture_report())
        row = table.splitlines()[1]
        assert "14.2" in row and "22.8" in row and "27.0" in row

    def test_tsv_and_table_carry_identical_values(self):
        report = self.fixture_report()
        table = render_report(report, "table")
        tsv = render_report(report, "tsv")
        assert [line.split() for line in table.splitlines()][1][-5:] == tsv.splitlines()[
            1
        ].split("\t")[1:]

    def test_missing_cells_render_na(self):
        report = EvalReport(("Hindi",), (ReportRow("x", {"Hindi": None}),))
        assert "n/a" in render_report(report)

    def test_empty_report_is_header_only(self):
        report = EvalReport(("Hindi",), ())
        assert render_report(report).splitlines() == ["system  Hindi"]

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render_report(self.fixture_report(), "html")
