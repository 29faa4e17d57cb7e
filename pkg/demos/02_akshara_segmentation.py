"""Segmenting words into aksharas, the unit the conversion rules use.

An akshara is one orthographic syllable: consonants joined by viramas,
then a vowel (implicit, matra, or an independent letter), then coda
signs.  The parse is exact: re-rendering reproduces the input.
"""

from indic_cls import ScriptId, normalize, segment_aksharas
from indic_cls.errors import MalformedWordError


def describe(word: str, script: ScriptId) -> None:
    parsed = segment_aksharas(normalize(word), script)
    base = script.block_base
    print(f"  {word}  ->  {len(parsed)} akshara(s)")
    for a in parsed:
        onset = " + ".join(chr(base + c) for c in a.onset) or "-"
        nucleus = a.nucleus_kind.value
        if a.nucleus_index is not None:
            nucleus += f" ({chr(base + a.nucleus_index)})"
        trailing = "".join(chr(base + t) for t in a.trailing) or "-"
        print(f"      onset {onset:12} nucleus {nucleus:18} signs {trailing}")
    assert parsed.render() == normalize(word)


print("=== simple words ===")
describe("कमल", ScriptId.DEVANAGARI)     # three bare consonants
describe("आम", ScriptId.DEVANAGARI)      # independent vowel + consonant

print()
print("=== clusters, matras, signs ===")
describe("मित्र", ScriptId.DEVANAGARI)    # matra, then a two-consonant cluster
describe("कं", ScriptId.DEVANAGARI)       # anusvara rides the syllable coda
describe("क्तम्", ScriptId.DEVANAGARI)     # word-final dead consonant

print()
print("=== the same machinery in other scripts ===")
describe("ক্ষী", ScriptId.BENGALI)   # kssii
describe("કાં", ScriptId.GUJARATI)        # kaam
describe("କ୍ତ", ScriptId.ODIA)            # kta

print()
print("=== malformed words are rejected, with the offending position ===")
for bad in ["्क", "ाक"]:
    try:
        segment_aksharas(bad, ScriptId.DEVANAGARI)
    except MalformedWordError as exc:
        print(f"  {bad!r}: {exc}")
