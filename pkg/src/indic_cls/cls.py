"""Native script to common-label-set conversion.

Phonetically equivalent graphemes of the four scripts occupy the same
block slot, so one slot-indexed label inventory serves every script: KA
maps to "k" whether it was written in Devanagari, Bengali, Gujarati or
Odia, and the long /a:/ vowel and its matra both map to "aa".

A word is converted by segmenting it into aksharas, emitting the labels
of each akshara (onset consonants, nucleus vowel, trailing signs), then
applying two language-specific corrections:

* schwa deletion removes inherent vowels that are written but not
  spoken (word-final in Hindi, Marathi, Gujarati and Bengali; also
  medially in Hindi; never in Odia);
* geminate correction merges the two identical consonant labels of a
  doubled consonant into one token ("k", "k" -> "kk").
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .akshara import Akshara, NucleusKind, segment_aksharas
from .errors import IndicClsError, InventoryGapError
from .script import CharCategory, LanguageId, ScriptId, category_table, normalize

WORD_BOUNDARY = "|"

_KIND_OF_CATEGORY = {
    CharCategory.INDEPENDENT_VOWEL: "vowel",
    CharCategory.VOWEL_SIGN: "matra",
    CharCategory.CONSONANT: "consonant",
    CharCategory.ANUSVARA: "sign",
    CharCategory.VISARGA: "sign",
    CharCategory.CANDRABINDU: "sign",
}


@dataclass(frozen=True, eq=False)
class ClsInventory:
    """The common label set, keyed by slot index within each kind.

    `overrides` scopes exception labels to one script; it is empty in
    the bundled inventory.  `schwa` is the label of the inherent vowel.
    Instances compare and hash by identity so per-script derived maps
    can be cached against them.
    """

    vowels: Mapping[int, str]
    matras: Mapping[int, str]
    consonants: Mapping[int, str]
    signs: Mapping[int, str]
    overrides: Mapping[tuple[ScriptId, int, str], str]
    schwa: str = "a"
    consonant_labels: frozenset[str] = field(init=False)
    vowel_labels: frozenset[str] = field(init=False)
    sign_labels: frozenset[str] = field(init=False)

    def __post_init__(self):
        of_kind = lambda *kinds: {
            v for (_, _, k), v in self.overrides.items() if k in kinds
        }
        object.__setattr__(
            self,
            "consonant_labels",
            frozenset(self.consonants.values()) | of_kind("consonant"),
        )
        object.__setattr__(
            self,
            "vowel_labels",
            frozenset(self.vowels.values())
            | frozenset(self.matras.values())
            | of_kind("vowel", "matra"),
        )
        object.__setattr__(
            self, "sign_labels", frozenset(self.signs.values()) | of_kind("sign")
        )

    def label(self, script: ScriptId, index: int, category: CharCategory) -> str:
        kind = _KIND_OF_CATEGORY[category]
        label = self.overrides.get((script, index, kind))
        if label is None:
            label = getattr(self, _KIND_TO_FIELD[kind]).get(index)
        if label is None:
            raise InventoryGapError(script, index)
        return label

    def is_geminate(self, token: str) -> bool:
        """True for a doubled consonant label ("kk", "dxdx", ...)."""
        half, rem = divmod(len(token), 2)
        return (
            rem == 0
            and half > 0
            and token[:half] == token[half:]
            and token[:half] in self.consonant_labels
            and token not in self.consonant_labels
        )


_KIND_TO_FIELD = {
    "vowel": "vowels",
    "matra": "matras",
    "consonant": "consonants",
    "sign": "signs",
}

_CATEGORY_TO_KIND = {
    "independent_vowel": "vowel",
    "vowel_sign": "matra",
    "consonant": "consonant",
    "anusvara": "sign",
    "visarga": "sign",
    "candrabindu": "sign",
}


def parse_inventory(lines: Iterable[str]) -> ClsInventory:
    maps: dict[str, dict[int, str]] = {
        "vowel": {},
        "matra": {},
        "consonant": {},
        "sign": {},
    }
    overrides: dict[tuple[ScriptId, int, str], str] = {}
    for line_no, line in enumerate(lines, 1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (3, 4):
            raise ValueError(f"inventory line {line_no}: expected 3 or 4 fields")
        index = int(fields[0], 16)
        kind = _CATEGORY_TO_KIND.get(fields[1])
        if kind is None:
            raise ValueError(f"inventory line {line_no}: bad category {fields[1]!r}")
        label = fields[2]
        if not label or any(c.isspace() for c in label):
            raise ValueError(f"inventory line {line_no}: bad label {label!r}")
        if len(fields) == 4:
            overrides[(ScriptId.from_name(fields[3]), index, kind)] = label
        else:
            if index in maps[kind]:
                raise ValueError(f"inventory line {line_no}: duplicate slot")
            maps[kind][index] = label
    return ClsInventory(
        vowels=maps["vowel"],
        matras=maps["matra"],
        consonants=maps["consonant"],
        signs=maps["sign"],
        overrides=overrides,
    )


@lru_cache(maxsize=None)
def default_inventory() -> ClsInventory:
    text = (
        resources.files("indic_cls.data")
        .joinpath("cls_inventory.tsv")
        .read_text("utf-8")
    )
    return parse_inventory(text.splitlines())


@dataclass(frozen=True)
class SchwaRules:
    """Deletion switches for one language's inherent vowel."""

    delete_word_final: bool
    delete_medial: bool


@lru_cache(maxsize=None)
def schwa_rules() -> Mapping[LanguageId, SchwaRules]:
    text = (
        resources.files("indic_cls.data")
        .joinpath("schwa_rules.tsv")
        .read_text("utf-8")
    )
    rules: dict[LanguageId, SchwaRules] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        lang, final, medial = line.split("\t")
        rules[LanguageId.from_name(lang)] = SchwaRules(
            final == "true", medial == "true"
        )
    missing = set(LanguageId) - rules.keys()
    if missing:
        raise ValueError(f"schwa rules missing for {sorted(m.value for m in missing)}")
    return rules


def schwa_rules_for(lang: LanguageId) -> SchwaRules:
    return schwa_rules()[lang]


@dataclass(frozen=True)
class ClsWord:
    """A word as a sequence of CLS labels."""

    labels: tuple[str, ...]
    source_lang: LanguageId | None = None

    @property
    def key(self) -> str:
        return " ".join(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class SyllableLabels:
    """Labels of one akshara, before flattening.

    `inherent` marks a nucleus that came from the implicit vowel (the
    only kind schwa deletion may remove); a deleted or absent nucleus is
    None.
    """

    onset: tuple[str, ...]
    nucleus: str | None
    inherent: bool
    trailing: tuple[str, ...]

    def flat(self) -> tuple[str, ...]:
        if self.nucleus is None:
            return self.onset + self.trailing
        return self.onset + (self.nucleus,) + self.trailing


def _syllable_labels(
    akshara: Akshara, script: ScriptId, inventory: ClsInventory
) -> SyllableLabels:
    onset = tuple(
        inventory.label(script, c, CharCategory.CONSONANT) for c in akshara.onset
    )
    if akshara.nucleus_kind is NucleusKind.INHERENT:
        nucleus, inherent = inventory.schwa, True
    elif akshara.nucleus_kind is NucleusKind.MATRA:
        nucleus, inherent = (
            inventory.label(script, akshara.nucleus_index, CharCategory.VOWEL_SIGN),
            False,
        )
    elif akshara.nucleus_kind is NucleusKind.INDEPENDENT:
        nucleus, inherent = (
            inventory.label(
                script, akshara.nucleus_index, CharCategory.INDEPENDENT_VOWEL
            ),
            False,
        )
    else:  # NO_VOWEL
        nucleus, inherent = None, False
    table = category_table()
    trailing = tuple(
        inventory.label(script, t, table[(script, t)]) for t in akshara.trailing
    )
    return SyllableLabels(onset, nucleus, inherent, trailing)


def schwa_delete(
    syllables: Sequence[SyllableLabels], rules: SchwaRules
) -> list[SyllableLabels]:
    """Apply a language's schwa deletion to akshara-grouped labels.

    Word-final: the inherent vowel of the last akshara goes when the
    word has at least two aksharas and that akshara is a single bare
    consonant.  Medial (Hindi): an inherent vowel flanked by
    vowel-bearing aksharas goes, scanning right to left, but only
    between single consonants so no triple cluster can arise.  Runs
    after the final rule, so a just-deleted final syllable already
    blocks its neighbour.
    """
    out = list(syllables)

    def bears_vowel(syl: SyllableLabels) -> bool:
        return syl.nucleus is not None

    if (
        rules.delete_word_final
        and len(out) >= 2
        and out[-1].inherent
        and len(out[-1].onset) == 1
    ):
        out[-1] = replace(out[-1], nucleus=None, inherent=False)

    if rules.delete_medial:
        for i in range(len(out) - 2, 0, -1):
            syl = out[i]
            if not (syl.inherent and syl.nucleus is not None):
                continue
            if len(syl.onset) != 1 or syl.trailing:
                continue
            nxt = out[i + 1]
            if len(nxt.onset) != 1:
                continue
            if bears_vowel(out[i - 1]) and bears_vowel(nxt):
                out[i] = replace(syl, nucleus=None, inherent=False)

    return out


def geminate_correct(
    labels: Sequence[str], inventory: ClsInventory | None = None
) -> list[str]:
    """Merge adjacent identical consonant labels pairwise ("k","k" -> "kk").

    Only inventory consonant labels merge, so the output token "kk" is
    inert and a second application changes nothing.
    """
    inv = inventory or default_inventory()
    consonants = inv.consonant_labels
    out: list[str] = []
    for label in labels:
        if out and out[-1] == label and label in consonants:
            out[-1] = label + label
        else:
            out.append(label)
    return out


def word_to_cls(
    word: str,
    lang: LanguageId,
    *,
    schwa: bool = True,
    geminate: bool = True,
    inventory: ClsInventory | None = None,
    rules: SchwaRules | None = None,
) -> ClsWord:
    """Convert one normalized native-script word to CLS labels.

    `schwa` and `geminate` switch the two corrections off for debugging
    or for raw grapheme-level output; `rules` overrides the language's
    bundled schwa rule set.
    """
    inv = inventory or default_inventory()
    parsed = segment_aksharas(word, lang.script)
    syllables = [_syllable_labels(a, lang.script, inv) for a in parsed]
    if schwa:
        syllables = schwa_delete(syllables, rules or schwa_rules_for(lang))
    labels = [label for syl in syllables for label in syl.flat()]
    if geminate:
        labels = geminate_correct(labels, inv)
    return ClsWord(tuple(labels), lang)


@dataclass(frozen=True)
class WordError:
    """A word that failed conversion, with its position in the text."""

    index: int
    word: str
    error: Exception

    def __str__(self) -> str:
        return f"word {self.index} {self.word!r}: {self.error}"


@dataclass
class ClsTextResult:
    text: str
    errors: list[WordError] = field(default_factory=list)


def _is_digit_token(token: str) -> bool:
    return bool(token) and all(unicodedata.category(c) == "Nd" for c in token)


def strip_punctuation(token: str) -> str:
    return "".join(c for c in token if not unicodedata.category(c).startswith("P"))


def text_to_cls(
    text: str,
    lang: LanguageId,
    *,
    schwa: bool = True,
    geminate: bool = True,
    strict: bool = False,
    boundary: str = WORD_BOUNDARY,
    inventory: ClsInventory | None = None,
) -> ClsTextResult:
    """Convert whitespace-tokenized native text to CLS text.

    Input is normalized first.  Punctuation is stripped, digit tokens
    pass through unchanged, and the labels of consecutive words are
    separated by the `boundary` token.  In strict mode the first failing
    word raises; otherwise failing words are skipped and reported in
    the result.
    """
    words: list[str] = []
    errors: list[WordError] = []
    for index, token in enumerate(normalize(text).split()):
        token = strip_punctuation(token)
        if not token:
            continue
        if _is_digit_token(token):
            words.append(token)
            continue
        try:
            cls_word = word_to_cls(
                token, lang, schwa=schwa, geminate=geminate, inventory=inventory
            )
        except (IndicClsError, ValueError) as exc:
            if strict:
                raise
            errors.append(WordError(index, token, exc))
            continue
        words.append(" ".join(cls_word.labels))
    return ClsTextResult(f" {boundary} ".join(words), errors)
