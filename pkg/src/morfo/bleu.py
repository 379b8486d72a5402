"""BLEU: clipped n-gram precision with brevity penalty, single reference."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import EmptyCorpus, EmptyInput, LengthMismatch

SMOOTH_EPS = 0.1


@dataclass(frozen=True)
class BleuScore:
    precisions: Tuple[float, ...]
    brevity_penalty: float
    score: float
    hyp_len: int
    ref_len: int


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _clipped_matches(hyp: Sequence[str], ref: Sequence[str], n: int) -> Tuple[int, int]:
    hyp_counts = _ngrams(hyp, n)
    ref_counts = _ngrams(ref, n)
    matches = sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
    return matches, max(len(hyp) - n + 1, 0)


def _brevity_penalty(hyp_len: int, ref_len: int) -> float:
    if hyp_len == 0:
        return 0.0
    if hyp_len < ref_len:
        return math.exp(1.0 - ref_len / hyp_len)
    return 1.0


def _geometric_score(precisions: Sequence[float], bp: float) -> float:
    if any(p <= 0.0 for p in precisions) or not precisions:
        return 0.0
    log_mean = sum(math.log(p) for p in precisions) / len(precisions)
    return 100.0 * bp * math.exp(log_mean)


def corpus_bleu(hypotheses, references, max_n: int = 4) -> BleuScore:
    """Corpus-level BLEU with clipped counts pooled over all sentence pairs."""
    if len(hypotheses) != len(references):
        raise LengthMismatch(f"{len(hypotheses)} hypotheses vs {len(references)} references")
    if not hypotheses:
        raise EmptyCorpus("no sentence pairs")
    matches = [0] * max_n
    totals = [0] * max_n
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        hyp_len += len(hyp)
        ref_len += len(ref)
        for n in range(1, max_n + 1):
            m, t = _clipped_matches(hyp, ref, n)
            matches[n - 1] += m
            totals[n - 1] += t
    precisions = tuple(m / t if t else 0.0 for m, t in zip(matches, totals))
    bp = _brevity_penalty(hyp_len, ref_len)
    return BleuScore(precisions, bp, _geometric_score(precisions, bp), hyp_len, ref_len)


def sentence_bleu(hypothesis, reference, max_n: int = 4) -> BleuScore:
    """Single-pair BLEU with add-epsilon smoothing for zero-match orders."""
    if not hypothesis or not reference:
        raise EmptyInput("hypothesis and reference must be non-empty")
    precisions = []
    for n in range(1, max_n + 1):
        m, t = _clipped_matches(hypothesis, reference, n)
        if t == 0:
            continue  # hypothesis shorter than n; order carries no evidence
        num = float(m) if m > 0 else SMOOTH_EPS
        precisions.append(num / t)
    bp = _brevity_penalty(len(hypothesis), len(reference))
    return BleuScore(
        tuple(precisions),
        bp,
        _geometric_score(precisions, bp),
        len(hypothesis),
        len(reference),
    )
