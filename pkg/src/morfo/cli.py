"""Command-line interface: separate / combine / stats / bleu / rules."""

from __future__ import annotations

import argparse
import multiprocessing
import os
import sys

from . import bleu as bleu_mod
from . import pipeline, rules, stats
from .errors import DanglingAffix, MorfoError
from .lexicon import load_lexicon

_WORKER_STATE = {}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morfo", description="Reversible Indonesian sub-word segmenter")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sep = sub.add_parser("separate", help="separate words into tilde-marked sub-word tokens")
    p_sep.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    p_sep.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    p_sep.add_argument("--lexicon", default=os.environ.get("MORFO_LEXICON"), help="root-word list (or $MORFO_LEXICON)")
    p_sep.add_argument("--paper-exact", action="store_true", help="render per~ as pe~ (lossy)")
    p_sep.add_argument("--jobs", type=int, default=1, help="parallel workers, order-preserving")

    p_com = sub.add_parser("combine", help="fold tilde tokens back into words")
    p_com.add_argument("input", nargs="?", default="-")
    p_com.add_argument("-o", "--output", default="-")

    p_stats = sub.add_parser("stats", help="vocabulary reduction report")
    p_stats.add_argument("--before", required=True)
    p_stats.add_argument("--after", required=True)

    p_bleu = sub.add_parser("bleu", help="BLEU score of hypotheses against references")
    p_bleu.add_argument("--hyp", required=True)
    p_bleu.add_argument("--ref", required=True)
    p_bleu.add_argument("--sentence", action="store_true", help="per-line smoothed scores")

    p_rules = sub.add_parser("rules", help="rule table utilities")
    p_rules.add_argument("action", choices=["dump"])
    return parser


def _open_in(path: str):
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="utf-8")


def _open_out(path: str):
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _init_worker(lexicon, paper_exact):
    _WORKER_STATE["lexicon"] = lexicon
    _WORKER_STATE["paper_exact"] = paper_exact


def _separate_line(line: str) -> str:
    return pipeline.separate_sentence(
        line, _WORKER_STATE["lexicon"], paper_exact=_WORKER_STATE["paper_exact"]
    )


def _cmd_separate(args) -> int:
    if not args.lexicon:
        print("separate: no lexicon given (use --lexicon or $MORFO_LEXICON)", file=sys.stderr)
        return 2
    lexicon = load_lexicon(args.lexicon)
    src = _open_in(args.input)
    dst = _open_out(args.output)
    try:
        lines = (line.rstrip("\n") for line in src)
        if args.jobs > 1:
            with multiprocessing.Pool(
                args.jobs, initializer=_init_worker, initargs=(lexicon, args.paper_exact)
            ) as pool:
                for out in pool.imap(_separate_line, lines, chunksize=256):
                    dst.write(out + "\n")
        else:
            _init_worker(lexicon, args.paper_exact)
            for line in lines:
                dst.write(_separate_line(line) + "\n")
    finally:
        if src is not sys.stdin:
            src.close()
        if dst is not sys.stdout:
            dst.close()
    return 0


def _cmd_combine(args) -> int:
    src = _open_in(args.input)
    dst = _open_out(args.output)
    failures = 0
    try:
        for lineno, line in enumerate(src, start=1):
            line = line.rstrip("\n")
            try:
                dst.write(pipeline.combine_sentence(line) + "\n")
            except DanglingAffix as exc:
                failures += 1
                print(f"combine: line {lineno}: {exc}", file=sys.stderr)
                dst.write(line + "\n")  # leave the malformed line untouched
    finally:
        if src is not sys.stdin:
            src.close()
        if dst is not sys.stdout:
            dst.close()
    return 1 if failures else 0


def _cmd_stats(args) -> int:
    with open(args.before, encoding="utf-8") as f:
        before = f.read().splitlines()
    with open(args.after, encoding="utf-8") as f:
        after = f.read().splitlines()
    report = stats.reduction_report(before, after)
    print(report.pretty())
    print()
    print("\n".join(report.lines()))
    return 0


def _read_token_lines(path: str) -> list:
    with open(path, encoding="utf-8") as f:
        return [line.split() for line in f.read().splitlines()]


def _cmd_bleu(args) -> int:
    hyps = _read_token_lines(args.hyp)
    refs = _read_token_lines(args.ref)
    if args.sentence:
        if len(hyps) != len(refs):
            print(f"bleu: {len(hyps)} hypotheses vs {len(refs)} references", file=sys.stderr)
            return 1
        for i, (h, r) in enumerate(zip(hyps, refs), start=1):
            score = bleu_mod.sentence_bleu(h, r)
            print(f"{i}\t{score.score:.2f}")
        return 0
    result = bleu_mod.corpus_bleu(hyps, refs)
    print(f"bleu\t{result.score:.2f}")
    for n, p in enumerate(result.precisions, start=1):
        print(f"p{n}\t{p:.4f}")
    print(f"brevity_penalty\t{result.brevity_penalty:.4f}")
    print(f"hyp_len\t{result.hyp_len}")
    print(f"ref_len\t{result.ref_len}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "separate":
            return _cmd_separate(args)
        if args.command == "combine":
            return _cmd_combine(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "bleu":
            return _cmd_bleu(args)
        if args.command == "rules":
            print(rules.dump_rules())
            return 0
    except MorfoError as exc:
        print(f"morfo: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"morfo: {exc}", file=sys.stderr)
        return 1
    return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
