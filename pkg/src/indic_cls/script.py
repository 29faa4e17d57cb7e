"""Unicode block services for the four supported Indic scripts.

Devanagari, Bengali, Gujarati and Odia inherit one parallel 128-slot
layout from ISCII: the offset of a code point from its block base means
the same thing in every block (offset 0x15 is KA everywhere, 0x4D is the
virama, and so on).  Everything in this module is arithmetic on that
layout: detection counts code points per block, and transliteration
moves a code point from one block to the same slot of another.

The blocks are parallel but not identical; which slots are assigned per
script, and what kind of character each slot holds, comes from the
bundled ``char_categories.tsv`` table (generated from the Unicode
character database, see ``tools/gen_char_categories.py``).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .errors import UnmappableCharError

BLOCK_SIZE = 0x80

VIRAMA_INDEX = 0x4D
NUKTA_INDEX = 0x3C
DIGIT_INDEX_RANGE = range(0x66, 0x70)

ZERO_WIDTH_NON_JOINER = "‌"
ZERO_WIDTH_JOINER = "‍"

DANDA = "।"
DOUBLE_DANDA = "॥"


class ScriptId(Enum):
    """The four script blocks, valued by their block base code point."""

    DEVANAGARI = 0x0900
    BENGALI = 0x0980
    GUJARATI = 0x0A80
    ODIA = 0x0B00

    @property
    def block_base(self) -> int:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "ScriptId":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown script {name!r}") from None


class LanguageId(Enum):
    """The five languages, valued by their lowercase name."""

    HINDI = "hindi"
    MARATHI = "marathi"
    GUJARATI = "gujarati"
    BENGALI = "bengali"
    ODIA = "odia"

    @property
    def script(self) -> ScriptId:
        return _LANGUAGE_SCRIPT[self]

    @classmethod
    def from_name(cls, name: str) -> "LanguageId":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown language {name!r}") from None


_LANGUAGE_SCRIPT = {
    LanguageId.HINDI: ScriptId.DEVANAGARI,
    LanguageId.MARATHI: ScriptId.DEVANAGARI,
    LanguageId.GUJARATI: ScriptId.GUJARATI,
    LanguageId.BENGALI: ScriptId.BENGALI,
    LanguageId.ODIA: ScriptId.ODIA,
}

_BASE_TO_SCRIPT = {s.block_base: s for s in ScriptId}


def languages_for_script(script: ScriptId) -> tuple[LanguageId, ...]:
    """Languages written in `script` (two for Devanagari, one otherwise)."""
    return tuple(l for l, s in _LANGUAGE_SCRIPT.items() if s is script)


class CharCategory(Enum):
    """What kind of character an assigned slot holds."""

    INDEPENDENT_VOWEL = "independent_vowel"
    CONSONANT = "consonant"
    VOWEL_SIGN = "vowel_sign"  # matra
    VIRAMA = "virama"
    NUKTA = "nukta"
    ANUSVARA = "anusvara"
    VISARGA = "visarga"
    CANDRABINDU = "candrabindu"
    DIGIT = "digit"
    PUNCTUATION = "punctuation"
    ZERO_WIDTH = "zero_width"
    OTHER = "other"


SIGN_CATEGORIES = frozenset(
    {CharCategory.ANUSVARA, CharCategory.VISARGA, CharCategory.CANDRABINDU}
)

# Categories that identify the script of a text.  Digits and punctuation
# occupy in-block slots but carry no script-specific phonetics, and danda
# is shared across scripts in running text, so they do not vote.
_DETECTION_CATEGORIES_IGNORED = frozenset(
    {CharCategory.DIGIT, CharCategory.PUNCTUATION}
)


@lru_cache(maxsize=None)
def category_table() -> Mapping[tuple[ScriptId, int], CharCategory]:
    """(script, index) -> category for every assigned slot."""
    text = (
        resources.files("indic_cls.data")
        .joinpath("char_categories.tsv")
        .read_text("utf-8")
    )
    table: dict[tuple[ScriptId, int], CharCategory] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        script_name, index_hex, category = line.split("\t")
        table[(ScriptId.from_name(script_name), int(index_hex, 16))] = CharCategory(
            category
        )
    return table


def is_assigned(script: ScriptId, index: int) -> bool:
    return (script, index) in category_table()


@lru_cache(maxsize=None)
def _nukta_compositions() -> Mapping[str, str]:
    """base+nukta pairs that NFC leaves decomposed -> precomposed char.

    The precomposed nukta consonants (QA .. YYA, Bengali/Odia RRA, RHA,
    YYA) are Unicode composition exclusions, so plain NFC decomposes
    them.  We prefer the single code point for slot arithmetic.
    """
    pairs: dict[str, str] = {}
    for script in ScriptId:
        nukta = chr(script.block_base + NUKTA_INDEX)
        for i in range(BLOCK_SIZE):
            ch = chr(script.block_base + i)
            decomp = unicodedata.decomposition(ch)
            if not decomp or decomp.startswith("<"):
                continue
            parts = decomp.split()
            if len(parts) == 2 and chr(int(parts[1], 16)) == nukta:
                pair = chr(int(parts[0], 16)) + nukta
                if unicodedata.normalize("NFC", pair) != ch:
                    pairs[pair] = ch
    return pairs


def normalize(text: str) -> str:
    """NFC plus nukta composition, with ZWJ/ZWNJ dropped.

    Joiners affect glyph shaping, not phonetics, so they are removed
    outright.  Idempotent: a second pass is a no-op.
    """
    text = unicodedata.normalize("NFC", text)
    if ZERO_WIDTH_NON_JOINER in text or ZERO_WIDTH_JOINER in text:
        text = text.replace(ZERO_WIDTH_NON_JOINER, "").replace(
            ZERO_WIDTH_JOINER, ""
        )
        text = unicodedata.normalize("NFC", text)
    for pair, composed in _nukta_compositions().items():
        if pair in text:
            text = text.replace(pair, composed)
    return text


def to_common_index(char: str) -> tuple[ScriptId, int] | None:
    """Split a character into (script block, slot index); None if non-Indic."""
    cp = ord(char)
    script = _BASE_TO_SCRIPT.get(cp & ~0x7F)
    if script is None:
        return None
    return script, cp & 0x7F


def from_common_index(script: ScriptId, index: int) -> str | None:
    """Character at `index` in `script`'s block; None if the slot is unassigned."""
    if not 0 <= index < BLOCK_SIZE:
        raise ValueError(f"common index out of range: {index}")
    if not is_assigned(script, index):
        return None
    return chr(script.block_base + index)


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of script detection over a piece of text.

    `script` is set when exactly one block occurs; with two or more
    blocks it is None and `is_mixed` is true; with no Indic code points
    both are falsy.  `counts` holds the per-block code point tallies.
    """

    script: ScriptId | None
    counts: Mapping[ScriptId, int]

    @property
    def is_mixed(self) -> bool:
        return len(self.counts) > 1

    @property
    def has_indic(self) -> bool:
        return bool(self.counts)


def detect_script(text: str) -> DetectionResult:
    """Detect the script of `text` by Unicode block membership.

    Only script-bearing slots vote: in-block digits and punctuation
    (danda) are shared content and are ignored, as is everything outside
    the four blocks.
    """
    table = category_table()
    counts: dict[ScriptId, int] = {}
    for char in text:
        hit = to_common_index(char)
        if hit is None:
            continue
        script, index = hit
        category = table.get((script, index))
        if category is None or category in _DETECTION_CATEGORIES_IGNORED:
            continue
        counts[script] = counts.get(script, 0) + 1
    script = next(iter(counts)) if len(counts) == 1 else None
    return DetectionResult(script, counts)


def transliterate_offset(text: str, source: ScriptId, target: ScriptId) -> str:
    """Move every Indic code point to the same slot of `target`'s block.

    `source` documents the expected input script; the mapping itself is
    driven purely by each code point's own slot index.  Digit and
    punctuation slots pass through unchanged (they are script-neutral),
    as does everything non-Indic.  Raises UnmappableCharError at the
    first slot the target block does not assign.
    """
    table = category_table()
    out: list[str] = []
    for position, char in enumerate(text):
        hit = to_common_index(char)
        if hit is None:
            out.append(char)
            continue
        script, index = hit
        category = table.get((script, index))
        if category in _DETECTION_CATEGORIES_IGNORED:
            out.append(char)
            continue
        mapped = from_common_index(target, index)
        if mapped is None:
            raise UnmappableCharError(position, char)
        out.append(mapped)
    return "".join(out)
