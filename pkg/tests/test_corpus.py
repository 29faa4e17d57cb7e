import random

import pytest

from indic_cls.corpus import (
    DEFAULT_LID,
    LidScheme,
    TargetFlavor,
    corpus_stats,
    format_stats,
    inject_lid,
    load_manifest,
    parse_manifest,
    prep_corpus,
    strip_lid,
)
from indic_cls.errors import AlreadyTaggedError, ManifestError, MissingLidError
from indic_cls.script import LanguageId
from indic_cls.wordgen import random_sentence

HINDI = LanguageId.HINDI


class TestLidTokens:
    def test_surfaces(self):
        assert DEFAULT_LID.surface(HINDI) == "<hindi"
        assert DEFAULT_LID.surface(LanguageId.GUJARATI) == "<gujarati"
        surfaces = [DEFAULT_LID.surface(lang) for lang in LanguageId]
        assert len(set(surfaces)) == 5

    def test_inject(self):
        assert inject_lid(HINDI, "आ") == "<hindi आ"

    def test_inject_empty_transcript_is_tag_only(self):
        assert inject_lid(LanguageId.GUJARATI, "") == "<gujarati"

    def test_double_tagging_rejected(self):
        with pytest.raises(AlreadyTaggedError):
            inject_lid(HINDI, "<hindi आ")
        with pytest.raises(AlreadyTaggedError):
            inject_lid(HINDI, "<odia आ")  # any known tag blocks

    def test_strip(self):
        assert strip_lid("<hindi आ") == (HINDI, "आ")
        assert strip_lid("<odia") == (LanguageId.ODIA, "")

    def test_strip_without_token(self):
        with pytest.raises(MissingLidError):
            strip_lid("आ")
        with pytest.raises(MissingLidError):
            strip_lid("<hindiआ")  # not whitespace-delimited

    def test_mutual_inverse(self):
        rng = random.Random(3)
        for _ in range(100):
            lang = rng.choice(list(LanguageId))
            text = random_sentence(rng, lang.script, rng.randint(0, 4))
            tagged = inject_lid(lang, text)
            assert strip_lid(tagged) == (lang, text)
            # and the other direction on validly tagged lines
            stripped_lang, rest = strip_lid(tagged)
            assert inject_lid(stripped_lang, rest) == tagged

    def test_inner_whitespace_preserved(self):
        tagged = inject_lid(HINDI, "आ  आ")
        assert strip_lid(tagged) == (HINDI, "आ  आ")

    def test_custom_template(self):
        scheme = LidScheme("[{lang}]")
        assert scheme.surface(HINDI) == "[hindi]"
        assert strip_lid("[hindi] आ", scheme) == (HINDI, "आ")

    def test_degenerate_template_rejected(self):
        with pytest.raises(ValueError):
            LidScheme("<lid")  # same surface for every language
        with pytest.raises(ValueError):
            LidScheme("{lang} x")  # embedded space


MANIFEST = """\
# id	lang	seconds	audio	transcript
utt1	hindi	2.5	a/utt1.wav	कमल कमल
utt2	odia	3.0	a/utt2.wav	କମଳ
utt3	hindi	1.25	a/utt3.wav	आ
"""


class TestManifest:
    def test_parse(self):
        manifest = parse_manifest(MANIFEST.splitlines())
        assert len(manifest) == 3
        first = manifest.utterances[0]
        assert first.utt_id == "utt1"
        assert first.lang is HINDI
        assert first.duration_ms == 2500
        assert first.duration_sec == 2.5
        assert first.audio_path == "a/utt1.wav"
        assert first.transcript == "कमल कमल"
        assert manifest.warnings == []

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "m.tsv"
        path.write_text(MANIFEST, encoding="utf-8")
        assert len(load_manifest(path)) == 3

    def test_field_count_enforced(self):
        with pytest.raises(ManifestError):
            parse_manifest(["utt1\thindi\t1.0\taudio"])

    def test_duplicate_id_fatal(self):
        lines = ["u\thindi\t1\ta\tआ", "u\thindi\t1\ta\tआ"]
        with pytest.raises(ManifestError):
            parse_manifest(lines)

    def test_unknown_language_fatal(self):
        with pytest.raises(ManifestError):
            parse_manifest(["u\tklingon\t1\ta\tआ"])

    def test_bad_duration_fatal(self):
        with pytest.raises(ManifestError):
            parse_manifest(["u\thindi\tfast\ta\tआ"])
        with pytest.raises(ManifestError):
            parse_manifest(["u\thindi\t-1\ta\tआ"])

    def test_script_mismatch_warns(self):
        manifest = parse_manifest(["u\todia\t1\ta\tआ"])
        assert len(manifest.warnings) == 1
        assert "devanagari" in manifest.warnings[0].message

    def test_empty_transcript_warns(self):
        manifest = parse_manifest(["u\thindi\t1\ta\t"])
        assert len(manifest) == 1
        assert manifest.warnings[0].message == "empty transcript"


class TestPrep:
    def manifest(self):
        return parse_manifest(MANIFEST.splitlines())

    def test_native_is_verbatim(self):
        result = prep_corpus(self.manifest(), TargetFlavor.NATIVE)
        assert result.lines == [
            "utt1\tकमल कमल",
            "utt2\tକମଳ",
            "utt3\tआ",
        ]
        assert result.errors == []

    def test_native_lid(self):
        result = prep_corpus(self.manifest(), TargetFlavor.NATIVE_LID)
        assert result.lines[0] == "utt1\t<hindi कमल कमल"
        assert result.lines[1].startswith("utt2\t<odia ")

    def test_cls(self):
        result = prep_corpus(self.manifest(), TargetFlavor.CLS)
        assert result.lines[0] == "utt1\tk a m a l | k a m a l"
        assert result.lines[2] == "utt3\taa"

    def test_cls_lid_composition(self):
        result = prep_corpus(self.manifest(), TargetFlavor.CLS_LID)
        assert result.lines[2] == "utt3\t<hindi aa"
        for line in result.lines:
            target = line.split("\t", 1)[1]
            assert DEFAULT_LID.parse(target.split()[0]) is not None

    def test_conversion_failures_go_to_error_channel(self):
        manifest = parse_manifest(
            ["good\thindi\t1\ta\tआ", "bad\thindi\t1\ta\tाक"]
        )
        for flavor in TargetFlavor:
            result = prep_corpus(manifest, flavor)
            assert len(result.lines) + len(result.errors) == 2
            if flavor.wants_cls:
                assert [e.utt_id for e in result.errors] == ["bad"]
                assert result.errors[0].stage == "cls"
            else:
                assert result.errors == []

    def test_empty_transcript_warns_but_emits(self):
        manifest = parse_manifest(["u\thindi\t1\ta\t"])
        result = prep_corpus(manifest, TargetFlavor.CLS_LID)
        assert result.lines == ["u\t<hindi"]
        assert [w.stage for w in result.warnings] == ["transcript"]

    def test_empty_manifest(self):
        result = prep_corpus(parse_manifest([]), TargetFlavor.CLS)
        assert result.lines == [] and result.errors == []

    def test_order_preserved(self):
        rng = random.Random(29)
        lines = []
        for i in range(50):
            lang = rng.choice(list(LanguageId))
            text = random_sentence(rng, lang.script, 3)
            lines.append(f"u{i:03d}\t{lang.value}\t1\ta\t{text}")
        manifest = parse_manifest(lines)
        result = prep_corpus(manifest, TargetFlavor.NATIVE_LID)
        assert [l.split("\t")[0] for l in result.lines] == [
            f"u{i:03d}" for i in range(50)
        ]


class TestStats:
    def test_single_hour(self):
        manifest = parse_manifest(["u\thindi\t3600\ta\tआ"])
        stats = corpus_stats(manifest)
        hindi = next(r for r in stats.rows if r.lang is HINDI)
        assert hindi.utterances == 1
        assert hindi.hours == 1.0
        assert hindi.hours_display == 1
        assert stats.total.hours_display == 1

    def test_empty_manifest_all_zero(self):
        stats = corpus_stats(parse_manifest([]))
        assert len(stats.rows) == 5
        assert all(r.utterances == 0 and r.duration_ms == 0 for r in stats.rows)
        assert stats.total.utterances == 0

    def test_totals_are_exact_sums(self):
        # thirds of a second would drift under float accumulation
        lines = [
            f"u{i}\thindi\t{0.333}\ta\tआ" for i in range(3000)
        ]
        stats = corpus_stats(parse_manifest(lines))
        hindi = next(r for r in stats.rows if r.lang is HINDI)
        assert hindi.duration_ms == 333 * 3000
        assert stats.total.duration_ms == 333 * 3000

    def test_display_rounds_half_up(self):
        manifest = parse_manifest(["u\thindi\t5400\ta\tआ"])  # 1.5 h
        stats = corpus_stats(manifest)
        hindi = next(r for r in stats.rows if r.lang is HINDI)
        assert hindi.hours_display == 2

    def test_format(self):
        manifest = parse_manifest(["u\thindi\t3600\ta\tआ"])
        table = format_stats(corpus_stats(manifest))
        lines = table.splitlines()
        assert lines[0].split() == ["language", "hours", "utterances"]
        assert lines[1].split() == ["hindi", "1", "1"]
        assert lines[-1].split() == ["total", "1", "1"]
