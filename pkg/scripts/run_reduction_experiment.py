#!/usr/bin/env python3
"""Separate a corpus, report vocabulary reduction, and demo the round trip.

Runs the full pipeline over an Indonesian corpus (the shipped sample by
default): separates every sentence into tilde-marked sub-word tokens,
prints the before/after vocabulary report, verifies that combining the
separated corpus reproduces the preprocessed input, and scores the
reconstruction with BLEU as a sanity check (identity should be 100.0).
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from morfo import (  # noqa: E402
    combine_sentence,
    corpus_bleu,
    load_lexicon,
    preprocess,
    reduction_report,
    separate_sentence,
)

REPO = pathlib.Path(__file__).resolve().parents[1]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", default=REPO / "data" / "sample_corpus.id.txt")
    parser.add_argument("--lexicon", default=REPO / "data" / "root_words.txt")
    parser.add_argument("-o", "--output", help="write the separated corpus here")
    args = parser.parse_args()

    lexicon = load_lexicon(args.lexicon)
    lines = pathlib.Path(args.corpus).read_text(encoding="utf-8").splitlines()

    start = time.perf_counter()
    separated = [separate_sentence(line, lexicon) for line in lines]
    elapsed = time.perf_counter() - start
    print(f"separated {len(lines):,} sentences in {elapsed:.2f}s "
          f"({len(lines) / elapsed:,.0f} sentences/s)\n")

    print(reduction_report(lines, separated).pretty())

    mismatches = sum(
        combine_sentence(sep) != " ".join(preprocess(line))
        for line, sep in zip(lines, separated)
    )
    print(f"\nround-trip mismatches: {mismatches} / {len(lines)}")

    recombined = [combine_sentence(sep).split() for sep in separated]
    reference = [preprocess(line) for line in lines]
    print(f"reconstruction BLEU: {corpus_bleu(recombined, reference).score:.2f}")

    if args.output:
        pathlib.Path(args.output).write_text("\n".join(separated) + "\n", encoding="utf-8")
        print(f"\nseparated corpus written to {args.output}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
