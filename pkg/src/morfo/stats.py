"""Vocabulary counting and before/after reduction reporting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .combiner import classify_token


@dataclass(frozen=True)
class VocabReport:
    tokens_before: int
    tokens_after: int
    reduction_abs: int
    reduction_pct: float
    sentences: int
    avg_words_per_sentence: float
    mark_vocab: int
    undefined: bool = False

    def lines(self) -> list:
        """Structured key-value rendering; one `key<TAB>value` pair per line."""
        out = [
            ("tokens_before", self.tokens_before),
            ("tokens_after", self.tokens_after),
            ("reduction_abs", self.reduction_abs),
            ("reduction_pct", f"{self.reduction_pct:.2f}"),
            ("sentences", self.sentences),
            ("avg_words_per_sentence", f"{self.avg_words_per_sentence:.2f}"),
            ("mark_vocab", self.mark_vocab),
            ("reduction_defined", str(not self.undefined).lower()),
        ]
        return [f"{k}\t{v}" for k, v in out]

    def pretty(self) -> str:
        rows = [
            ("unique tokens before separation", f"{self.tokens_before:,}"),
            ("unique tokens after separation", f"{self.tokens_after:,}"),
            ("vocabulary reduction (tokens)", f"{self.reduction_abs:,}"),
            ("vocabulary reduction (%)", f"{self.reduction_pct:.2f}"),
            ("sentences", f"{self.sentences:,}"),
            ("avg words per sentence (before)", f"{self.avg_words_per_sentence:.2f}"),
            ("affix-mark vocabulary", f"{self.mark_vocab}"),
        ]
        width = max(len(k) for k, _ in rows)
        text = "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
        note = "\nnote: token counts include punctuation tokens"
        if self.undefined:
            note += "\nnote: empty 'before' corpus; reduction percentage undefined, reported as 0"
        return text + note


def vocab_count(corpus: Iterable[str]) -> Tuple[int, int, int]:
    """(unique tokens, total tokens, sentences) over space-delimited lines."""
    unique = set()
    total = 0
    sentences = 0
    for line in corpus:
        sentences += 1
        toks = line.split()
        total += len(toks)
        unique.update(toks)
    return len(unique), total, sentences


def reduction_report(before: Iterable[str], after: Iterable[str]) -> VocabReport:
    """Compare unique-token vocabularies of a corpus and its separated rendering."""
    uniq_before, total_before, sentences = vocab_count(before)
    after_vocab = set()
    for line in after:
        after_vocab.update(line.split())
    uniq_after = len(after_vocab)
    marks = sum(1 for t in after_vocab if classify_token(t) in ("prefix", "suffix", "redup"))
    reduction = uniq_before - uniq_after
    undefined = uniq_before == 0
    pct = 0.0 if undefined else 100.0 * reduction / uniq_before
    avg = total_before / sentences if sentences else 0.0
    return VocabReport(
        tokens_before=uniq_before,
        tokens_after=uniq_after,
        reduction_abs=reduction,
        reduction_pct=pct,
        sentences=sentences,
        avg_words_per_sentence=avg,
        mark_vocab=marks,
        undefined=undefined,
    )
