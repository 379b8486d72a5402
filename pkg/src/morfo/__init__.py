"""Reversible rule-based sub-word segmentation for Indonesian."""

from .bleu import BleuScore, corpus_bleu, sentence_bleu
from .combiner import combine_tokens, combine_word
from .lexicon import RootLexicon, load_lexicon
from .pipeline import combine_sentence, preprocess, separate_sentence
from .rules import generate_prefix, is_allowed, strip_prefix_candidates, strip_suffix_chain
from .segmenter import Passthrough, Segmentation, detect_reduplication, select, separate_word
from .stats import VocabReport, reduction_report, vocab_count

__version__ = "0.1.0"

__all__ = [
    "BleuScore",
    "Passthrough",
    "RootLexicon",
    "Segmentation",
    "VocabReport",
    "combine_sentence",
    "combine_tokens",
    "combine_word",
    "corpus_bleu",
    "detect_reduplication",
    "generate_prefix",
    "is_allowed",
    "load_lexicon",
    "preprocess",
    "reduction_report",
    "select",
    "sentence_bleu",
    "separate_sentence",
    "separate_word",
    "strip_prefix_candidates",
    "strip_suffix_chain",
    "vocab_count",
]
