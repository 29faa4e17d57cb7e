"""WER/CER scoring and comparison-report rendering.

Rates come from a minimal-cost alignment; corpus scores pool raw
counts, never average per-utterance rates.
"""

from indic_cls import (
    EvalReport,
    LanguageId,
    ReportRow,
    cer,
    edit_distance_alignment,
    render_report,
    report_from_score,
    score_corpus,
    wer,
)

print("=== alignment under the hood ===")
ref = "क्या आप कल आ रहे हैं".split()
hyp = "क्या आप काल रहे हैं".split()
alignment = edit_distance_alignment(ref, hyp)
print(f"  ref: {' '.join(ref)}")
print(f"  hyp: {' '.join(hyp)}")
for step in alignment.steps:
    r = ref[step.ref_index] if step.ref_index is not None else "*"
    h = hyp[step.hyp_index] if step.hyp_index is not None else "*"
    print(f"    {step.op.value:5}  {r:6} {h}")
print(
    f"  S={alignment.substitutions} D={alignment.deletions}"
    f" I={alignment.insertions} M={alignment.matches}"
)

print()
print("=== single-pair rates ===")
rate = wer(" ".join(ref), " ".join(hyp))
print(f"  WER = {rate.errors}/{rate.ref_tokens} = {rate.rate:.3f}")
rate = cer("कमल", "कमर")
print(f"  CER('कमल','कमर') = {rate.rate:.3f}  (code points, spaces excluded)")

print()
print("=== pooled corpus scoring ===")
refs = {"u1": "w1 w2", "u2": "a b c d e f g h"}
hyps = {"u1": "w1 x", "u2": "a b c d e f g h"}
score = score_corpus(refs, hyps)
print(f"  utterance rates would average to 0.25; pooling gives {score.wer:.4f}")

langs = {"u1": LanguageId.HINDI, "u2": LanguageId.ODIA}
score = score_corpus(refs, hyps, langs)
print(render_report(report_from_score(score, "toy system", include_cer=True)))

print()
print("=== a comparison grid, rendered to one decimal ===")
languages = ("Hindi", "Gujarati", "Marathi", "Bengali", "Odia")
fixture = EvalReport(
    languages,
    (
        ReportRow("system A", dict(zip(languages, (17.0, 26.3, 52.2, 23.0, 32.7)))),
        ReportRow("system B", dict(zip(languages, (14.2, 22.8, 43.9, 19.5, 27.0)))),
    ),
)
print(render_report(fixture))
