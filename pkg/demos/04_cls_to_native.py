"""Reconstructing native script from CLS labels.

Schwa deletion makes the forward conversion lossy, so reconstruction
layers a corpus lexicon over a mechanical rule inverse.  Every word
carries a flag: exact, lexicon hit, or rule fallback on an ambiguous
sequence.
"""

import random

from indic_cls import (
    LanguageId,
    build_lexicon,
    cls_text_to_ns,
    cls_word_to_ns,
    random_sentence,
    text_to_cls,
    word_to_cls,
)

HINDI = LanguageId.HINDI

print("=== the rule inverse, when it is provably exact ===")
for labels, lang in [
    (["aa"], HINDI),
    (["k", "aa", "m"], LanguageId.ODIA),   # odia: trailing consonant is dead
    (["m", "i", "t", "r", "a"], LanguageId.MARATHI),
]:
    word, flag = cls_word_to_ns(labels, lang)
    print(f"  {' '.join(labels):18} ({lang.value:8}) -> {word:8} [{flag.value}]")

print()
print("=== ambiguity from schwa deletion ===")
labels = word_to_cls("दरवाजा", HINDI).labels
word, flag = cls_word_to_ns(labels, HINDI)
print(f"  {' '.join(labels)} -> {word} [{flag.value}]")
print("  (the cluster reading; rules alone cannot know a vowel was deleted)")

lexicon = build_lexicon(["दरवाजा कमल"], HINDI)
word, flag = cls_word_to_ns(labels, HINDI, lexicon)
print(f"  with a lexicon            -> {word} [{flag.value}]")

print()
print("=== fuzzy matching rectifies a recognizer's label error ===")
broken = ["d", "a", "r", "v", "aa", "j", "a"]  # final label garbled
word, flag = cls_word_to_ns(broken, HINDI, lexicon, fuzzy=True)
print(f"  {' '.join(broken)} -> {word} [{flag.value}]")

print()
print("=== mono vs unified text conversion ===")
rng = random.Random(12)
lexicons = {}
for lang in LanguageId:
    lines = [random_sentence(rng, lang.script, 8) for _ in range(20)]
    lexicons[lang] = build_lexicon(lines, lang)

native = random_sentence(rng, LanguageId.BENGALI.script, 4)
cls_line = text_to_cls(native, LanguageId.BENGALI).text
print(f"  original   : {native}")
print(f"  CLS        : {cls_line}")

mono = cls_text_to_ns(cls_line, LanguageId.BENGALI, lexicons=lexicons)
unified = cls_text_to_ns(f"<bengali {cls_line}", lexicons=lexicons)
print(f"  mono       : {mono.text}")
print(f"  unified    : {unified.text}   (dispatched on the <bengali tag)")
assert mono.text == unified.text
print(f"  flags      : {[f.value for f in unified.flags]}")
