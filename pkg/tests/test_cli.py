import io
import random

import pytest

from indic_cls.cli import main
from indic_cls.script import ScriptId
from indic_cls.wordgen import random_sentence


def run(argv, stdin=""):
    import sys

    class _Stdin(io.StringIO):
        def reconfigure(self, **kwargs):
            pass

    old = sys.stdin
    sys.stdin = _Stdin(stdin)
    try:
        return main(argv)
    finally:
        sys.stdin = old


class TestDetect:
    def test_lines(self, capsys):
        assert run(["detect"], "क\nhello\nक ક\n") == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["devanagari", "none", "mixed"]

    def test_counts(self, capsys):
        assert run(["detect", "--counts"], "क ક\n") == 0
        assert capsys.readouterr().out.strip() == "mixed\tdevanagari:1,gujarati:1"


class TestToCls:
    def test_basic(self, capsys):
        assert run(["to-cls", "--lang", "hindi"], "कमल कमल\n") == 0
        assert capsys.readouterr().out == "k a m a l | k a m a l\n"

    def test_lenient_warns_strict_fails(self, capsys):
        assert run(["to-cls", "--lang", "hindi"], "आ xyz\n") == 0
        captured = capsys.readouterr()
        assert captured.out == "aa\n"
        assert "xyz" in captured.err
        assert run(["to-cls", "--lang", "hindi", "--strict"], "आ xyz\n") == 2

    def test_missing_lang_is_usage_error(self, capsys):
        assert run(["to-cls"], "") == 1


class TestToNs:
    def test_mono(self, capsys):
        assert run(["to-ns", "--lang", "hindi"], "aa | k a\n") == 0
        assert capsys.readouterr().out == "आ क\n"

    def test_unified(self, capsys):
        assert run(["to-ns", "--unified"], "<odia k a\n") == 0
        assert capsys.readouterr().out == "କ\n"

    def test_unified_missing_token_strict(self, capsys):
        assert run(["to-ns", "--unified", "--strict"], "k a\n") == 2

    def test_lexicon_option(self, tmp_path, capsys):
        corpus = tmp_path / "c.txt"
        corpus.write_text("दरवाजा\n", encoding="utf-8")
        lex = tmp_path / "hindi.lex"
        assert (
            run(
                [
                    "lexicon", "build",
                    "--lang", "hindi",
                    "--corpus", str(corpus),
                    "--output", str(lex),
                ]
            )
            == 0
        )
        assert (
            run(
                ["to-ns", "--lang", "hindi", "--lexicon", f"hindi={lex}"],
                "d a r v aa j aa\n",
            )
            == 0
        )
        assert capsys.readouterr().out == "दरवाजा\n"

    def test_roundtrip_pipeline(self, capsys):
        rng = random.Random(4)
        text = random_sentence(rng, ScriptId.ODIA, 5, vowel_nuclei_only=True)
        assert run(["to-cls", "--lang", "odia"], text + "\n") == 0
        cls_text = capsys.readouterr().out
        assert run(["to-ns", "--lang", "odia"], cls_text) == 0
        assert capsys.readouterr().out.strip() == text


class TestTranslit:
    def test_basic(self, capsys):
        assert run(["translit", "--from", "devanagari", "--to", "gujarati"], "क\n") == 0
        assert capsys.readouterr().out == "ક\n"

    def test_unmappable_is_data_error(self, capsys):
        assert run(["translit", "--from", "devanagari", "--to", "bengali"], "ऩ\n") == 2
        assert "no counterpart" in capsys.readouterr().err


class TestPrepStatsScore:
    @pytest.fixture
    def manifest(self, tmp_path):
        path = tmp_path / "manifest.tsv"
        path.write_text(
            "u1\thindi\t3600\ta/u1.wav\tकमल\n"
            "u2\todia\t7200\ta/u2.wav\tକମଳ\n",
            encoding="utf-8",
        )
        return path

    def test_prep(self, manifest, tmp_path, capsys):
        out = tmp_path / "targets.tsv"
        errors = tmp_path / "errors.tsv"
        code = run(
            [
                "prep",
                "--manifest", str(manifest),
                "--flavor", "cls-lid",
                "--output", str(out),
                "--errors", str(errors),
            ]
        )
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "u1\t<hindi k a m a l"
        assert errors.read_text(encoding="utf-8") == ""

    def test_stats(self, manifest, capsys):
        assert run(["stats", "--manifest", str(manifest)]) == 0
        out = capsys.readouterr().out
        assert "total" in out and "3" in out

    def test_score(self, tmp_path, capsys):
        refs = tmp_path / "refs.tsv"
        hyps = tmp_path / "hyps.tsv"
        langs = tmp_path / "langs.tsv"
        refs.write_text("u1\tक मल\nu2\tआ आ\n", encoding="utf-8")
        hyps.write_text("u1\tक मल\nu2\tआ क\n", encoding="utf-8")
        langs.write_text("u1\thindi\nu2\thindi\n", encoding="utf-8")
        out = tmp_path / "report.tsv"
        code = run(
            [
                "score",
                "--refs", str(refs),
                "--hyps", str(hyps),
                "--langs", str(langs),
                "--cer",
                "--out", str(out),
            ]
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "25.0" in stdout  # 1 error over 4 ref words
        tsv = out.read_text(encoding="utf-8")
        assert "25.0" in tsv

    def test_score_unknown_id_is_data_error(self, tmp_path, capsys):
        refs = tmp_path / "refs.tsv"
        hyps = tmp_path / "hyps.tsv"
        refs.write_text("u1\tक\n", encoding="utf-8")
        hyps.write_text("uX\tक\n", encoding="utf-8")
        assert run(["score", "--refs", str(refs), "--hyps", str(hyps)]) == 2

    def test_missing_manifest_is_data_error(self, tmp_path):
        assert run(["stats", "--manifest", str(tmp_path / "nope.tsv")]) == 2


class TestReport:
    def test_grid(self, tmp_path, capsys):
        values = tmp_path / "values.tsv"
        values.write_text(
            "system\tHindi\tGujarati\n"
            "Monolingual\t34.9\t43.1\n"
            "CLS+LID\t31.82\t32.04\n",
            encoding="utf-8",
        )
        assert run(["report", "--values", str(values)]) == 0
        out = capsys.readouterr().out
        assert "34.9" in out and "31.8" in out
        assert run(["report", "--values", str(values), "--format", "tsv"]) == 0
        tsv = capsys.readouterr().out
        assert "31.8\t32.0" in tsv


class TestUsage:
    def test_no_command(self):
        assert run([]) == 1

    def test_unknown_command(self):
        assert run(["frobnicate"]) == 1

    def test_version(self, capsys):
        assert run(["--version"]) == 0
