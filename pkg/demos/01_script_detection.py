"""Tour of the Unicode-block layer: detection, slots, transliteration.

The four script blocks share one 128-slot layout, so a character's
offset from its block base already says what it is; moving a word
between scripts is pure arithmetic on those offsets.
"""

from indic_cls import (
    ScriptId,
    detect_script,
    from_common_index,
    normalize,
    to_common_index,
    transliterate_offset,
)

print("=== script detection ===")
for text in ["कमल", "কমল", "hello 123", "क ક"]:
    result = detect_script(normalize(text))
    if result.script:
        verdict = result.script.name.lower()
    elif result.is_mixed:
        verdict = f"mixed {dict((s.name.lower(), n) for s, n in result.counts.items())}"
    else:
        verdict = "no Indic content"
    print(f"  {text!r:30} -> {verdict}")

print()
print("=== the shared slot layout ===")
print("the same offset means the same sound in every block:")
for char in ["क", "ক", "ક", "କ"]:
    script, index = to_common_index(char)
    print(f"  {char}  is slot 0x{index:02X} of {script.name.lower()}")

print()
print("slot 0x15 realized in each script:")
for script in ScriptId:
    print(f"  {script.name.lower():12} {from_common_index(script, 0x15)}")

print()
print("=== offset transliteration ===")
word = "कमल"
for target in [ScriptId.BENGALI, ScriptId.GUJARATI, ScriptId.ODIA]:
    moved = transliterate_offset(word, ScriptId.DEVANAGARI, target)
    back = transliterate_offset(moved, target, ScriptId.DEVANAGARI)
    print(f"  {word} -> {moved} ({target.name.lower()}), back -> {back}")

print()
print("blocks are parallel but not identical; unmappable slots raise:")
try:
    transliterate_offset("ऩ", ScriptId.DEVANAGARI, ScriptId.BENGALI)
except Exception as exc:
    print(f"  {type(exc).__name__}: {exc}")
