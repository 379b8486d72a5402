#!/usr/bin/env python3
"""Regenerate data/sample_corpus.id.txt: a synthetic Indonesian sample corpus.

Sentences mix bare roots, function words, numbers, punctuation, reduplicated
forms, and affixed forms produced by the package's own generation rules, so
the corpus exercises the full separation/combination surface. Deterministic
for a given seed.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from morfo import Segmentation, combine_word, load_lexicon  # noqa: E402
from morfo.errors import NoGenerationRule  # noqa: E402
from morfo.rules import PARTICLES, PREFIXES, SUFFIXES_DS, SUFFIXES_PP, is_allowed  # noqa: E402

FUNCTION_WORDS = (
    "yang dan di ke dari untuk pada dengan ini itu tidak akan sudah juga "
    "saya kamu dia kami kita mereka bisa harus atau karena"
).split()

PREFIX_COMBOS = (
    [()] * 6
    + [(p,) for p in PREFIXES] * 2
    + [("me", "per"), ("ke", "ber"), ("se", "pe"), ("di", "per"), ("ke", "se")]
)


def random_word(rng: random.Random, roots: list) -> str:
    root = rng.choice(roots)
    if rng.random() < 0.03:
        return f"{root}-{root}"  # bare reduplication
    if rng.random() < 0.30:
        return root
    prefixes = rng.choice(PREFIX_COMBOS)
    ds = rng.choice((None, None, *SUFFIXES_DS))
    pp = rng.choice((None, None, None, *SUFFIXES_PP))
    p = rng.choice((None, None, None, None, *PARTICLES))
    if not is_allowed(prefixes, ds):
        ds = None
    seg = Segmentation(root=root, prefixes=prefixes, ds=ds, pp=pp, p=p)
    try:
        return combine_word(seg)
    except NoGenerationRule:
        return root


def make_sentence(rng: random.Random, roots: list) -> str:
    length = rng.randint(6, 16)
    words = []
    for _ in range(length):
        if rng.random() < 0.25:
            words.append(rng.choice(FUNCTION_WORDS))
        elif rng.random() < 0.02:
            words.append(str(rng.randint(1, 2030)))
        else:
            words.append(random_word(rng, roots))
    if rng.random() < 0.15:
        cut = rng.randint(1, len(words) - 1)
        words.insert(cut, ",")
    sentence = " ".join(words).replace(" ,", " ,")
    end = rng.choice([".", ".", ".", "?", "!"])
    return sentence + " " + end


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lexicon", default="data/root_words.txt")
    parser.add_argument("--output", default="data/sample_corpus.id.txt")
    parser.add_argument("--sentences", type=int, default=10000)
    parser.add_argument("--seed", type=int, default=20240817)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    roots = sorted(load_lexicon(args.lexicon).roots)
    with open(args.output, "w", encoding="utf-8") as out:
        for _ in range(args.sentences):
            out.write(make_sentence(rng, roots) + "\n")
    print(f"wrote {args.sentences} sentences to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
