"""Manifests, training-target flavors, and corpus statistics.

A manifest is a five-column TSV (id, language, seconds, audio path,
transcript).  From it, four training-target files can be produced:
native or CLS text, each with or without a language-ID tag.
"""

import random

from indic_cls import (
    LanguageId,
    TargetFlavor,
    corpus_stats,
    format_stats,
    parse_manifest,
    prep_corpus,
    random_sentence,
)

rng = random.Random(55)
lines = []
for i in range(12):
    lang = rng.choice(list(LanguageId))
    text = random_sentence(rng, lang.script, rng.randint(2, 4))
    seconds = rng.randint(2, 9)
    lines.append(f"utt{i:02d}\t{lang.value}\t{seconds}\taudio/utt{i:02d}.wav\t{text}")
# one deliberately broken transcript to show the error channel
lines.append("uttXX\thindi\t3\taudio/x.wav\tाक")

manifest = parse_manifest(lines)
print(f"manifest: {len(manifest)} utterances, {len(manifest.warnings)} warning(s)")

print()
print("=== the four target flavors for one utterance ===")
first = manifest.utterances[0]
print(f"  transcript : {first.transcript}  ({first.lang.value})")
for flavor in TargetFlavor:
    result = prep_corpus(manifest, flavor)
    target = result.lines[0].split("\t", 1)[1]
    print(f"  {flavor.value:10} : {target}")

print()
print("=== conservation: every utterance lands in lines or errors ===")
for flavor in TargetFlavor:
    result = prep_corpus(manifest, flavor)
    print(
        f"  {flavor.value:10} : {len(result.lines)} lines"
        f" + {len(result.errors)} errors = {len(manifest)}"
    )
    for record in result.errors:
        print(f"               error on {record.utt_id} [{record.stage}]: {record.message}")

print()
print("=== per-language statistics (exact millisecond accumulation) ===")
print(format_stats(corpus_stats(manifest)))
