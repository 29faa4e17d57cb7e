#!/usr/bin/env python3
"""Regenerate src/indic_cls/data/char_categories.tsv from unicodedata.

One row per assigned slot of the four script blocks:

    script<TAB>index-hex<TAB>category

Letters are split into vowels and consonants by the ISCII-inherited slot
ranges; all signs are classified from their Unicode names.  Slots that
carry no phonetic content for this toolkit (OM, avagraha, Vedic marks,
currency and fraction signs, ...) are classed `other`.
"""

import sys
import unicodedata

BLOCKS = {
    "devanagari": 0x0900,
    "bengali": 0x0980,
    "gujarati": 0x0A80,
    "odia": 0x0B00,
}

VOWEL_LETTER_INDICES = set(range(0x04, 0x15)) | {0x60, 0x61} | set(range(0x72, 0x78))
CONSONANT_INDICES = (
    set(range(0x15, 0x3A))
    | {0x4E}  # Bengali khanda ta (Devanagari 0x4E is a vowel sign)
    | set(range(0x58, 0x60))
    | {0x70, 0x71}  # Bengali ra variants, Odia wa
    | set(range(0x78, 0x80))
)


def classify(index: int, name: str, general_category: str) -> str:
    if general_category == "Nd":
        return "digit"
    if name.endswith("DANDA") or name.endswith("ABBREVIATION SIGN"):
        return "punctuation"
    if name.endswith("CANDRABINDU"):
        return "candrabindu"
    if name.endswith("SIGN ANUSVARA"):
        return "anusvara"
    if name.endswith("SIGN VISARGA"):
        return "visarga"
    if name.endswith("SIGN VIRAMA"):
        return "virama"
    if name.endswith("SIGN NUKTA"):
        return "nukta"
    if "VOWEL SIGN" in name:
        return "vowel_sign"
    if general_category == "Lo" and "VEDIC" not in name:
        if index in VOWEL_LETTER_INDICES:
            return "independent_vowel"
        if index in CONSONANT_INDICES:
            return "consonant"
    return "other"


def rows():
    for script, base in BLOCKS.items():
        for index in range(0x80):
            char = chr(base + index)
            name = unicodedata.name(char, None)
            if name is None:
                continue
            category = classify(index, name, unicodedata.category(char))
            yield f"{script}\t{index:02x}\t{category}"


def main(out=sys.stdout):
    print(f"# Assigned slots of the four script blocks (Unicode {unicodedata.unidata_version}).", file=out)
    print("# Generated by tools/gen_char_categories.py; do not edit by hand.", file=out)
    print("# script\tindex\tcategory", file=out)
    for row in rows():
        print(row, file=out)


if __name__ == "__main__":
    main()
