"""Sentence-level separation and combination over the tilde wire format."""

from __future__ import annotations

from . import combiner
from .lexicon import RootLexicon
from .segmenter import separate_word

PUNCTUATION = combiner.PUNCTUATION


def preprocess(sentence: str) -> list:
    """Lowercase, split on whitespace, detach leading/trailing punctuation.

    Internal hyphens stay inside their token (reduplication).
    """
    tokens = []
    for raw in sentence.lower().split():
        lead = []
        trail = []
        while raw and raw[0] in PUNCTUATION:
            lead.append(raw[0])
            raw = raw[1:]
        while raw and raw[-1] in PUNCTUATION:
            trail.append(raw[-1])
            raw = raw[:-1]
        tokens.extend(lead)
        if raw:
            tokens.append(raw)
        tokens.extend(reversed(trail))
    return tokens


def separate_sentence(sentence: str, lexicon: RootLexicon, paper_exact: bool = False) -> str:
    """Preprocess and separate every word; join all wire tokens with spaces."""
    out = []
    for token in preprocess(sentence):
        if len(token) == 1 and token in PUNCTUATION:
            out.append(token)
        else:
            out.extend(separate_word(token, lexicon).tokens(paper_exact=paper_exact))
    return " ".join(out)


def combine_sentence(separated: str) -> str:
    """Fold a line of wire-format tokens back into surface words."""
    return " ".join(combiner.combine_tokens(separated.split()))
