#!/usr/bin/env python3
"""Regenerate the per-language fixture corpora under tests/data/.

Each corpus holds 240 distinct grammar-generated words (eight per line)
whose CLS keys are collision-free within the language, so a lexicon
built from the corpus recovers every word exactly.  Deterministic from
the fixed seed.
"""

import random
import sys
from pathlib import Path

from indic_cls.cls import word_to_cls
from indic_cls.script import LanguageId
from indic_cls.wordgen import random_word

WORDS_PER_LANG = 240
WORDS_PER_LINE = 8
SEED = 20240


def corpus_words(lang: LanguageId, count: int) -> list[str]:
    rng = random.Random(f"{SEED}:{lang.value}")
    words: list[str] = []
    keys: set[str] = set()
    while len(words) < count:
        word = random_word(rng, lang.script, min_aksharas=2, max_aksharas=5)
        key = word_to_cls(word, lang).key
        if key in keys:
            continue
        keys.add(key)
        words.append(word)
    return words


def main():
    out_dir = Path(__file__).resolve().parents[1] / "tests" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for lang in LanguageId:
        words = corpus_words(lang, WORDS_PER_LANG)
        path = out_dir / f"corpus_{lang.value}.txt"
        with open(path, "w", encoding="utf-8") as handle:
            for start in range(0, len(words), WORDS_PER_LINE):
                handle.write(" ".join(words[start : start + WORDS_PER_LINE]) + "\n")
        print(f"{path}: {len(words)} words", file=sys.stderr)


if __name__ == "__main__":
    main()
