"""Native script to common-label-set conversion.

Phonetically equivalent graphemes of all four scripts map to the same
label, so one acoustic-model target space covers five languages.  The
language still matters for its rules: where Hindi drops unspoken
inherent vowels, Odia keeps every one of them.
"""

from indic_cls import (
    LanguageId,
    ScriptId,
    text_to_cls,
    transliterate_offset,
    word_to_cls,
)

print("=== one label space for every script ===")
word = "कमल"
print(f"  {'hindi':10} {word}   -> {word_to_cls(word, LanguageId.HINDI).key}")
for lang in [LanguageId.BENGALI, LanguageId.GUJARATI]:
    moved = transliterate_offset(word, ScriptId.DEVANAGARI, lang.script)
    print(f"  {lang.value:10} {moved}   -> {word_to_cls(moved, lang).key}")

print()
print("=== schwa deletion is language-specific ===")
odia_word = transliterate_offset(word, ScriptId.DEVANAGARI, ScriptId.ODIA)
print(f"  hindi deletes the final inherent vowel : {word_to_cls(word, LanguageId.HINDI).key}")
print(f"  odia keeps all of them                 : {word_to_cls(odia_word, LanguageId.ODIA).key}")
print(f"  hindi also deletes medially            : दरवाजा -> {word_to_cls('दरवाजा', LanguageId.HINDI).key}")
print(f"  marathi only deletes finally           : दरवाजा -> {word_to_cls('दरवाजा', LanguageId.MARATHI).key}")

print()
print("=== geminate correction ===")
print(f"  अक्का -> {word_to_cls('अक्का', LanguageId.HINDI).key}   (doubled k becomes one token)")
print(f"  switched off: {word_to_cls('अक्का', LanguageId.HINDI, geminate=False).key}")

print()
print("=== whole lines ===")
result = text_to_cls("कमल कमल। आ १२३", LanguageId.HINDI)
print(f"  'कमल कमल। आ १२३' -> {result.text!r}")
print("  (punctuation stripped, digits pass through, words joined by '|')")

result = text_to_cls("आ xyz आ", LanguageId.HINDI)
print(f"  lenient mode skips what it cannot convert: {result.text!r}")
for error in result.errors:
    print(f"    reported: {error}")
