"""CLS to native-script reconstruction.

The forward conversion is lossy on purpose: schwa deletion removes
inherent vowels and nothing marks where they stood.  Reconstruction
therefore runs in two stages:

* a frequency lexicon built from a training corpus maps a whole label
  sequence back to the native word it was most often produced from
  (with optional fuzzy matching that repairs one substituted label);
* a mechanical rule inverse covers everything else, inverting each
  language's own forward rules: consonant labels become consonants,
  adjacent consonants are rejoined with a virama, a vowel label becomes
  a matra after a consonant and an independent vowel elsewhere, and the
  inherent-vowel label disappears into its consonant.

A word-final consonant with no vowel is read as a deleted schwa
whenever the language's rules could have deleted one there (so Hindi
"k a m a l" comes back without a trailing virama), and as a dead
consonant otherwise (so it keeps its virama in Odia, after a cluster,
or in a single-consonant word, where deletion is impossible).  The
forward converter is the oracle for this inverse: wherever a label
sequence has exactly one preimage, converting the reconstruction
forward again reproduces the labels.

Every converted word carries a flag saying which path produced it and
whether the rule inverse was provably exact or the language's schwa
rules leave room for doubt.

Mono mode converts for one known language; unified mode reads the
language off a leading LID token and dispatches, so one call site can
serve mixed-language streams.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .cls import (
    WORD_BOUNDARY,
    ClsInventory,
    ClsWord,
    SchwaRules,
    WordError,
    _is_digit_token,
    default_inventory,
    schwa_rules_for,
    strip_punctuation,
    word_to_cls,
)
from .corpus import DEFAULT_LID, LidScheme, strip_lid
from .errors import (
    IndicClsError,
    LexiconError,
    MalformedClsError,
    UnknownLabelError,
)
from .script import (
    VIRAMA_INDEX,
    CharCategory,
    LanguageId,
    ScriptId,
    category_table,
    normalize,
)


class NsFlag(Enum):
    EXACT = "exact"
    LEXICON_HIT = "lexicon-hit"
    RULE_FALLBACK_AMBIGUOUS = "rule-fallback-ambiguous"


class _ScriptMaps(NamedTuple):
    consonant_char: Mapping[str, str]
    vowel_char: Mapping[str, str]
    matra_char: Mapping[str, str]
    sign_char: Mapping[str, str]


_KIND_INFO = {
    # category -> (maps field, canonical slot range)
    CharCategory.CONSONANT: ("consonant_char", range(0x15, 0x3A)),
    CharCategory.INDEPENDENT_VOWEL: ("vowel_char", range(0x05, 0x15)),
    CharCategory.VOWEL_SIGN: ("matra_char", range(0x3E, 0x4D)),
    CharCategory.ANUSVARA: ("sign_char", range(0x00, 0x04)),
    CharCategory.VISARGA: ("sign_char", range(0x00, 0x04)),
    CharCategory.CANDRABINDU: ("sign_char", range(0x00, 0x04)),
}


@lru_cache(maxsize=None)
def _script_maps(inventory: ClsInventory, script: ScriptId) -> _ScriptMaps:
    """Label -> grapheme maps for one script.

    When two slots of a script share a label, the slot from the core
    ISCII range wins (e.g. plain TA over Bengali khanda ta), lowest
    index as the final tie break, so the inverse is deterministic.
    """
    best: dict[tuple[str, str], tuple[tuple[bool, int], str]] = {}
    for (s, index), category in category_table().items():
        if s is not script:
            continue
        info = _KIND_INFO.get(category)
        if info is None:
            continue
        field_name, canonical = info
        label = inventory.label(script, index, category)
        rank = (index not in canonical, index)
        key = (field_name, label)
        if key not in best or rank < best[key][0]:
            best[key] = (rank, chr(script.block_base + index))
    maps: dict[str, dict[str, str]] = {f: {} for f, _ in _KIND_INFO.values()}
    for (field_name, label), (_, char) in best.items():
        maps[field_name][label] = char
    return _ScriptMaps(**maps)


def _split_geminate(token: str, inventory: ClsInventory) -> str | None:
    return token[: len(token) // 2] if inventory.is_geminate(token) else None


def _final_deletion_possible(
    tokens: Sequence[str], pos: int, rules: SchwaRules, inventory: ClsInventory
) -> bool:
    """Could word-final schwa deletion have left `tokens[pos]` bare?

    Deletion strips the inherent vowel of a final akshara made of one
    consonant in a word of two or more aksharas, so the bare consonant
    must be a plain label preceded by a non-consonant token.
    """
    if not rules.delete_word_final:
        return False
    if tokens[pos] not in inventory.consonant_labels:
        return False  # a geminate onset is too big to lose its vowel
    if pos == 0:
        return False  # no preceding akshara
    before = tokens[pos - 1]
    return not (
        before in inventory.consonant_labels or inventory.is_geminate(before)
    )


def _rule_inverse(
    tokens: Sequence[str],
    lang: LanguageId,
    inventory: ClsInventory,
    rules: SchwaRules,
) -> str:
    script = lang.script
    maps = _script_maps(inventory, script)
    virama = chr(script.block_base + VIRAMA_INDEX)

    def grapheme(table: Mapping[str, str], token: str, what: str) -> str:
        char = table.get(token)
        if char is None:
            raise MalformedClsError(
                f"label {token!r} has no {what} in {script.name.lower()}"
            )
        return char

    n = len(tokens)
    # sign_tail[i]: tokens[i:] is all coda signs (so position i is word-final
    # as far as consonants and vowels are concerned)
    sign_tail = [False] * (n + 1)
    sign_tail[n] = True
    for i in range(n - 1, -1, -1):
        sign_tail[i] = tokens[i] in inventory.sign_labels and sign_tail[i + 1]

    out: list[str] = []
    bare = None  # index of a consonant token still awaiting its vowel
    for pos, token in enumerate(tokens):
        half = _split_geminate(token, inventory)
        if token in inventory.consonant_labels or half is not None:
            base = half or token
            char = grapheme(maps.consonant_char, base, "consonant")
            if bare is not None:
                out.append(virama)
            out.append(char)
            if half is not None:
                out.append(virama)
                out.append(char)
            bare = pos
        elif token in inventory.vowel_labels:
            if bare is not None:
                if token != inventory.schwa:
                    out.append(grapheme(maps.matra_char, token, "matra"))
                # the inherent vowel is implicit in its consonant
                bare = None
            else:
                out.append(grapheme(maps.vowel_char, token, "vowel letter"))
        elif token in inventory.sign_labels:
            if pos == 0:
                raise MalformedClsError(
                    f"sign label {token!r} cannot start a word"
                )
            if bare is not None:
                if not sign_tail[pos]:
                    raise MalformedClsError(
                        f"sign label {token!r} after a vowel-less consonant "
                        f"inside a word"
                    )
                if not _final_deletion_possible(tokens, bare, rules, inventory):
                    out.append(virama)  # dead consonant keeps its virama
                bare = None
            out.append(grapheme(maps.sign_char, token, "sign"))
        else:
            raise UnknownLabelError(token)
    if bare is not None and not _final_deletion_possible(
        tokens, bare, rules, inventory
    ):
        out.append(virama)
    return "".join(out)


def _ambiguity_flag(
    tokens: Sequence[str], rules: SchwaRules, inventory: ClsInventory
) -> NsFlag:
    """Exact unless this language's schwa rules could have deleted a vowel.

    Word-final deletion leaves ``... x C signs*`` with x not a
    consonant; medial deletion leaves ``x C C v`` (or ``x CC v`` once
    the geminate merge has fused an identical pair), with x a vowel or
    sign and v a vowel.  Anything else has a unique preimage.
    """
    consonants = inventory.consonant_labels
    vowels = inventory.vowel_labels
    signs = inventory.sign_labels

    def consonantish(token: str) -> bool:
        return token in consonants or inventory.is_geminate(token)

    core = len(tokens)
    while core > 0 and tokens[core - 1] in signs:
        core -= 1
    if (
        rules.delete_word_final
        and core >= 2
        and tokens[core - 1] in consonants
        and not consonantish(tokens[core - 2])
    ):
        return NsFlag.RULE_FALLBACK_AMBIGUOUS

    if rules.delete_medial:
        for p in range(1, len(tokens)):
            if consonantish(tokens[p - 1]):
                continue
            if (
                inventory.is_geminate(tokens[p])
                and p + 1 < len(tokens)
                and tokens[p + 1] in vowels
            ):
                return NsFlag.RULE_FALLBACK_AMBIGUOUS
            if (
                tokens[p] in consonants
                and p + 2 < len(tokens)
                and tokens[p + 1] in consonants
                and tokens[p + 2] in vowels
            ):
                return NsFlag.RULE_FALLBACK_AMBIGUOUS
    return NsFlag.EXACT


class Lexicon:
    """CLS-key -> native-word candidates with corpus counts.

    Candidates are kept count-descending (ties broken by the native
    word) so lookups are deterministic; every stored word converts back
    to its own key.
    """

    def __init__(
        self,
        lang: LanguageId,
        entries: Mapping[str, Iterable[tuple[str, int]]] | None = None,
        skipped: int = 0,
    ):
        self.lang = lang
        self.entries: dict[str, tuple[tuple[str, int], ...]] = {}
        self.skipped = skipped
        for key, candidates in (entries or {}).items():
            self.entries[key] = _order_candidates(candidates)
        self._by_length: dict[int, list[tuple[str, ...]]] | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def lookup(self, key: str) -> str | None:
        candidates = self.entries.get(key)
        return candidates[0][0] if candidates else None

    def candidates(self, key: str) -> tuple[tuple[str, int], ...]:
        return self.entries.get(key, ())

    def fuzzy_lookup(self, labels: Sequence[str]) -> str | None:
        """Unique key one label substitution away, or None."""
        if self._by_length is None:
            index: dict[int, list[tuple[str, ...]]] = {}
            for key in self.entries:
                key_labels = tuple(key.split(" "))
                index.setdefault(len(key_labels), []).append(key_labels)
            self._by_length = index
        target = tuple(labels)
        matches: list[tuple[str, ...]] = []
        for key_labels in self._by_length.get(len(target), ()):
            mismatches = sum(a != b for a, b in zip(target, key_labels))
            if mismatches == 1:
                matches.append(key_labels)
                if len(matches) > 1:
                    return None
        if len(matches) != 1:
            return None
        return self.lookup(" ".join(matches[0]))


def _order_candidates(candidates: Iterable[tuple[str, int]]):
    ordered = sorted(candidates, key=lambda c: (-c[1], c[0]))
    for _, count in ordered:
        if count <= 0:
            raise LexiconError("candidate counts must be positive")
    return tuple(ordered)


def build_lexicon(
    lines: Iterable[str],
    lang: LanguageId,
    *,
    inventory: ClsInventory | None = None,
) -> Lexicon:
    """Accumulate a lexicon from native-script text lines.

    Tokenization matches text_to_cls: normalize, split on whitespace,
    strip punctuation, ignore digit tokens.  Words that fail conversion
    are skipped and tallied on the result.
    """
    counts: dict[str, Counter] = {}
    skipped = 0
    for line in lines:
        for token in normalize(line).split():
            token = strip_punctuation(token)
            if not token or _is_digit_token(token):
                continue
            try:
                key = word_to_cls(token, lang, inventory=inventory).key
            except (IndicClsError, ValueError):
                skipped += 1
                continue
            counts.setdefault(key, Counter())[token] += 1
    return Lexicon(
        lang,
        {key: tuple(counter.items()) for key, counter in counts.items()},
        skipped=skipped,
    )


def save_lexicon(lexicon: Lexicon, path: str | os.PathLike) -> None:
    """Write `cls-key<TAB>native<TAB>count` rows, sorted for diffing."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"# lang: {lexicon.lang.value}\n")
        for key in sorted(lexicon.entries):
            for native, count in lexicon.entries[key]:
                handle.write(f"{key}\t{native}\t{count}\n")


def load_lexicon(
    path: str | os.PathLike,
    lang: LanguageId | None = None,
    *,
    validate: bool = True,
    inventory: ClsInventory | None = None,
) -> Lexicon:
    """Read a lexicon file; checks the stored-word round trip by default."""
    entries: dict[str, list[tuple[str, int]]] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.lstrip().startswith("#"):
                stripped = line.lstrip("# ").strip()
                if stripped.startswith("lang:") and lang is None:
                    lang = LanguageId.from_name(stripped.split(":", 1)[1].strip())
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconError(f"{path}:{line_no}: expected 3 fields")
            key, native, count_text = parts
            try:
                count = int(count_text)
            except ValueError:
                raise LexiconError(f"{path}:{line_no}: bad count") from None
            entries.setdefault(key, []).append((native, count))
    if lang is None:
        raise LexiconError(f"{path}: language neither given nor in the header")
    lexicon = Lexicon(lang, entries)
    if validate:
        for key, candidates in lexicon.entries.items():
            for native, _ in candidates:
                actual = word_to_cls(native, lang, inventory=inventory).key
                if actual != key:
                    raise LexiconError(
                        f"{path}: {native!r} converts to {actual!r}, filed under {key!r}"
                    )
    return lexicon


def cls_word_to_ns(
    labels: Sequence[str] | ClsWord,
    lang: LanguageId,
    lexicon: Lexicon | None = None,
    *,
    fuzzy: bool = False,
    inventory: ClsInventory | None = None,
    rules: SchwaRules | None = None,
) -> tuple[str, NsFlag]:
    """Convert one CLS label sequence back to a native-script word.

    The lexicon, when given, wins over the rule inverse; `fuzzy` lets a
    near-miss key (one substituted label, unique match) count as a hit.
    """
    inv = inventory or default_inventory()
    rules = rules or schwa_rules_for(lang)
    tokens = tuple(labels.labels if isinstance(labels, ClsWord) else labels)
    if lexicon is not None:
        if lexicon.lang is not lang:
            raise ValueError(
                f"lexicon is for {lexicon.lang.value}, word is {lang.value}"
            )
        hit = lexicon.lookup(" ".join(tokens))
        if hit is None and fuzzy:
            hit = lexicon.fuzzy_lookup(tokens)
        if hit is not None:
            return hit, NsFlag.LEXICON_HIT
    text = _rule_inverse(tokens, lang, inv, rules)
    return text, _ambiguity_flag(tokens, rules, inv)


@dataclass
class NsResult:
    """Reconstructed text with one flag per converted word."""

    text: str
    flags: list[NsFlag]
    errors: list[WordError] = field(default_factory=list)
    lang: LanguageId | None = None


def cls_text_to_ns(
    text: str,
    lang: LanguageId | None = None,
    *,
    lexicons: Mapping[LanguageId, Lexicon] | None = None,
    fuzzy: bool = False,
    strict: bool = False,
    boundary: str = WORD_BOUNDARY,
    lid: LidScheme = DEFAULT_LID,
    inventory: ClsInventory | None = None,
) -> NsResult:
    """Convert CLS text to native script.

    Mono mode (`lang` given) converts everything as that language.
    Unified mode (`lang` None) requires a leading LID token, strips it
    and dispatches; apart from the token the two modes are identical.
    Words are delimited by the `boundary` token; digit-only words pass
    through.  Failing words are skipped and reported unless `strict`.
    """
    if lang is None:
        lang, text = strip_lid(text, lid)
    lexicon = (lexicons or {}).get(lang)
    words: list[str] = []
    flags: list[NsFlag] = []
    errors: list[WordError] = []
    for index, group in enumerate(_split_words(text, boundary)):
        if len(group) == 1 and _is_digit_token(group[0]):
            words.append(group[0])
            flags.append(NsFlag.EXACT)
            continue
        try:
            word, flag = cls_word_to_ns(
                group, lang, lexicon, fuzzy=fuzzy, inventory=inventory
            )
        except (IndicClsError, ValueError) as exc:
            if strict:
                raise
            errors.append(WordError(index, " ".join(group), exc))
            continue
        words.append(word)
        flags.append(flag)
    return NsResult(" ".join(words), flags, errors, lang)


def _split_words(text: str, boundary: str) -> list[list[str]]:
    words: list[list[str]] = []
    current: list[str] = []
    for token in text.split():
        if token == boundary:
            if current:
                words.append(current)
                current = []
        else:
            current.append(token)
    if current:
        words.append(current)
    return words


def lexicons_from_corpora(
    corpora: Mapping[LanguageId, Iterable[str]],
    *,
    inventory: ClsInventory | None = None,
) -> dict[LanguageId, Lexicon]:
    """Build one lexicon per language from native-text line sources."""
    return {
        lang: build_lexicon(lines, lang, inventory=inventory)
        for lang, lines in corpora.items()
    }
