"""Inverse pass: rebuild surface words from segmentations or tilde token streams."""

from __future__ import annotations

from . import rules
from .errors import DanglingAffix

# Both renderings of per~ appear on the wire; pe~ is also the paper-exact
# rendering of per~, which combine resolves literally (documented as lossy).
_PREFIX_MARKS = frozenset(rules.PREFIXES)
_SUFFIX_NAMES = frozenset(rules.SUFFIXES_DS + rules.SUFFIXES_PP + rules.PARTICLES)
_REDUP_MARK = "prl~"
PUNCTUATION = frozenset(".,?!;:\"'()[]")


def combine_word(seg) -> str:
    """Render a segmentation back to its surface form."""
    stem = seg.root
    derived = False
    for prefix in reversed(seg.prefixes):
        stem = rules.generate_prefix(prefix, stem, derived=derived)
        derived = True
    suffixes = "".join(s for s in (seg.ds, seg.pp, seg.p) if s)
    if seg.redup:
        return stem + "-" + seg.root + suffixes
    return stem + suffixes


def classify_token(token: str) -> str:
    """One of: prefix, redup, suffix, punct, plain."""
    if token == _REDUP_MARK:
        return "redup"
    if token.endswith("~") and token[:-1] in _PREFIX_MARKS:
        return "prefix"
    if token.startswith("~") and token[1:] in _SUFFIX_NAMES:
        return "suffix"
    if len(token) == 1 and token in PUNCTUATION:
        return "punct"
    return "plain"


def combine_tokens(tokens) -> list:
    """Fold affix marks into their nearest root, one surface word per root."""
    words = []
    prefixes = []
    redup = False
    root = None
    suffix = ""

    def flush(position):
        nonlocal prefixes, redup, root, suffix
        if root is None:
            if prefixes or redup:
                raise DanglingAffix(position)
            return
        stem = root
        derived = False
        for prefix in reversed(prefixes):
            stem = rules.generate_prefix(prefix, stem, derived=derived)
            derived = True
        words.append(stem + ("-" + root if redup else "") + suffix)
        prefixes, redup, root, suffix = [], False, None, ""

    for i, token in enumerate(tokens):
        kind = classify_token(token)
        if kind == "prefix":
            if root is not None:
                flush(i)
            prefixes.append(token[:-1])
        elif kind == "redup":
            if root is not None:
                flush(i)
            redup = True
        elif kind == "suffix":
            if root is None:
                raise DanglingAffix(i, token)
            suffix += token[1:]
        elif kind == "punct":
            if root is not None:
                flush(i)
            if prefixes or redup:
                raise DanglingAffix(i, token)
            words.append(token)
        else:
            if root is not None:
                flush(i)
            root = token
    flush(len(tokens))
    if prefixes or redup:
        raise DanglingAffix(len(tokens))
    return words
