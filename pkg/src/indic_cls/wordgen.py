"""Random grammar-valid words for tests, demos and synthetic corpora.

Words are built directly from the akshara grammar, so they always
parse, and parsing always round-trips.  Generation is driven by an
explicit ``random.Random`` so corpora are reproducible from a seed.
"""

from __future__ import annotations

import random

from .script import (
    SIGN_CATEGORIES,
    VIRAMA_INDEX,
    CharCategory,
    ScriptId,
    category_table,
)


def slots(
    script: ScriptId, *categories: CharCategory, within=None
) -> tuple[int, ...]:
    """Assigned slot indices of `script` in the given categories."""
    table = category_table()
    return tuple(
        index
        for index in range(0x80)
        if table.get((script, index)) in categories
        and (within is None or index in within)
    )


def shared_slots() -> frozenset[int]:
    """Slots assigned with one and the same category in all four scripts.

    Words drawn from these slots transliterate between any two scripts
    without hitting an unassigned target slot.
    """
    table = category_table()
    shared = set()
    for index in range(0x80):
        categories = {table.get((script, index)) for script in ScriptId}
        if len(categories) == 1 and None not in categories:
            shared.add(index)
    return frozenset(shared)


def random_word(
    rng: random.Random,
    script: ScriptId,
    *,
    min_aksharas: int = 1,
    max_aksharas: int = 5,
    within=None,
    vowel_nuclei_only: bool = False,
    allow_signs: bool = True,
) -> str:
    """One random word of `script` that parses by construction.

    `within` restricts the slots drawn from (e.g. ``shared_slots()``
    for cross-script material).  `vowel_nuclei_only` guarantees every
    akshara carries a vowel (no dead final cluster), which makes the
    word immune to any schwa-deletion/round-trip subtleties.
    """
    vowels = slots(script, CharCategory.INDEPENDENT_VOWEL, within=within)
    consonants = slots(script, CharCategory.CONSONANT, within=within)
    matras = slots(script, CharCategory.VOWEL_SIGN, within=within)
    signs = slots(script, *SIGN_CATEGORIES, within=within) if allow_signs else ()
    if not vowels or not consonants:
        raise ValueError("slot restriction leaves no vowels or consonants")
    base = script.block_base
    virama = chr(base + VIRAMA_INDEX)

    n = rng.randint(min_aksharas, max_aksharas)
    parts: list[str] = []
    for k in range(n):
        last = k == n - 1
        if rng.random() < 0.15:
            parts.append(chr(base + rng.choice(vowels)))
        else:
            cluster = 2 if rng.random() < 0.18 else 1
            parts.append(
                virama.join(chr(base + rng.choice(consonants)) for _ in range(cluster))
            )
            roll = rng.random()
            if roll < 0.45 and matras:
                parts.append(chr(base + rng.choice(matras)))
            elif roll > 0.94 and last and not vowel_nuclei_only:
                parts.append(virama)  # dead final cluster
            # otherwise the inherent vowel
        if signs and rng.random() < 0.12:
            parts.append(chr(base + rng.choice(signs)))
    return "".join(parts)


def random_sentence(
    rng: random.Random,
    script: ScriptId,
    words: int,
    **word_kwargs,
) -> str:
    return " ".join(
        random_word(rng, script, **word_kwargs) for _ in range(words)
    )
