"""Segmentation of native-script words into aksharas.

An akshara is one orthographic syllable: a consonant cluster joined by
viramas, an optional vowel (the implicit inherent vowel, a matra, or an
independent vowel letter), and trailing nasalization signs.  The parser
is a greedy left-to-right reading of the grammar

    Akshara := Consonant (Virama Consonant)* (Virama | Matra | e) Sign*
             | IndependentVowel Sign*

where a consonant followed by neither virama nor matra carries the
inherent vowel, and a trailing virama ends the akshara as a dead
(vowel-less) cluster.  Parsing is exact: re-rendering the aksharas
reproduces the input string code point for code point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import MalformedWordError, MixedScriptError
from .script import (
    VIRAMA_INDEX,
    CharCategory,
    ScriptId,
    SIGN_CATEGORIES,
    category_table,
    to_common_index,
)


class NucleusKind(Enum):
    INHERENT = "inherent"
    MATRA = "matra"
    INDEPENDENT = "independent"
    NO_VOWEL = "no_vowel"


@dataclass(frozen=True)
class Akshara:
    """One orthographic syllable, in common-index terms."""

    onset: tuple[int, ...]
    nucleus_kind: NucleusKind
    nucleus_index: int | None
    trailing: tuple[int, ...]

    def __post_init__(self):
        if self.nucleus_kind is NucleusKind.INDEPENDENT:
            if self.onset:
                raise ValueError("independent vowel cannot follow an onset")
            if self.nucleus_index is None:
                raise ValueError("independent nucleus needs an index")
        elif self.nucleus_kind is NucleusKind.MATRA:
            if not self.onset or self.nucleus_index is None:
                raise ValueError("matra nucleus needs an onset and an index")
        else:
            if not self.onset:
                raise ValueError(f"{self.nucleus_kind.value} nucleus needs an onset")
            if self.nucleus_index is not None:
                raise ValueError(f"{self.nucleus_kind.value} nucleus carries no index")


@dataclass(frozen=True)
class ParsedWord:
    aksharas: tuple[Akshara, ...]
    script: ScriptId
    surface: str

    def render(self) -> str:
        return render_aksharas(self.aksharas, self.script)

    def __len__(self) -> int:
        return len(self.aksharas)

    def __iter__(self):
        return iter(self.aksharas)


def classify_char(script: ScriptId, index: int) -> CharCategory:
    """Category of the slot at `index` in `script`'s block."""
    category = category_table().get((script, index))
    if category is None:
        raise ValueError(f"slot 0x{index:02X} is unassigned in {script.name}")
    return category


def render_aksharas(aksharas, script: ScriptId) -> str:
    base = script.block_base
    virama = chr(base + VIRAMA_INDEX)
    out: list[str] = []
    for a in aksharas:
        for k, c in enumerate(a.onset):
            if k:
                out.append(virama)
            out.append(chr(base + c))
        if a.nucleus_kind is NucleusKind.NO_VOWEL:
            out.append(virama)
        elif a.nucleus_index is not None:
            out.append(chr(base + a.nucleus_index))
        for t in a.trailing:
            out.append(chr(base + t))
    return "".join(out)


def segment_aksharas(word: str, script: ScriptId) -> ParsedWord:
    """Parse a normalized single word of `script` into aksharas.

    Raises MixedScriptError if the word contains code points of another
    block, and MalformedWordError when the grammar is violated (leading
    matra/virama/sign, stray nukta, digits or punctuation inside the
    word, ...).
    """
    chars: list[tuple[int, CharCategory]] = []
    for position, char in enumerate(word):
        hit = to_common_index(char)
        if hit is None:
            raise MalformedWordError(position, f"non-Indic character {char!r}")
        char_script, index = hit
        if char_script is not script:
            raise MixedScriptError(
                f"position {position}: {char_script.name} character in a "
                f"{script.name} word"
            )
        chars.append((index, classify_char(script, index)))

    aksharas: list[Akshara] = []
    i = 0
    n = len(chars)
    while i < n:
        index, category = chars[i]
        if category is CharCategory.INDEPENDENT_VOWEL:
            i += 1
            trailing, i = _take_signs(chars, i)
            aksharas.append(
                Akshara((), NucleusKind.INDEPENDENT, index, trailing)
            )
        elif category is CharCategory.CONSONANT:
            onset = [index]
            i += 1
            nucleus_kind = NucleusKind.INHERENT
            nucleus_index = None
            while True:
                if i < n and chars[i][1] is CharCategory.VIRAMA:
                    if i + 1 < n and chars[i + 1][1] is CharCategory.CONSONANT:
                        onset.append(chars[i + 1][0])
                        i += 2
                        continue
                    # trailing virama: dead cluster ends the akshara
                    nucleus_kind = NucleusKind.NO_VOWEL
                    i += 1
                elif i < n and chars[i][1] is CharCategory.VOWEL_SIGN:
                    nucleus_kind = NucleusKind.MATRA
                    nucleus_index = chars[i][0]
                    i += 1
                break
            trailing, i = _take_signs(chars, i)
            aksharas.append(
                Akshara(tuple(onset), nucleus_kind, nucleus_index, trailing)
            )
        else:
            raise MalformedWordError(
                i, f"{category.value} cannot start an akshara"
            )

    parsed = ParsedWord(tuple(aksharas), script, word)
    assert parsed.render() == word, "akshara parse lost characters"
    return parsed


def _take_signs(chars, i) -> tuple[tuple[int, ...], int]:
    signs: list[int] = []
    while i < len(chars) and chars[i][1] in SIGN_CATEGORIES:
        signs.append(chars[i][0])
        i += 1
    return tuple(signs), i
