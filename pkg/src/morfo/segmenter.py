"""Word-level separation: candidate generation plus dictionary validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import combiner, rules
from .errors import NoGenerationRule
from .lexicon import RootLexicon

MAX_PREFIXES = 3
MIN_ROOT_LEN = 2


@dataclass(frozen=True)
class Segmentation:
    """A validated decomposition: prefixes, optional reduplication, root, suffix slots."""

    root: str
    prefixes: Tuple[str, ...] = ()
    redup: bool = False
    ds: Optional[str] = None
    pp: Optional[str] = None
    p: Optional[str] = None

    def affix_count(self) -> int:
        slots = (self.ds, self.pp, self.p)
        return len(self.prefixes) + int(self.redup) + sum(s is not None for s in slots)

    def tokens(self, paper_exact: bool = False) -> list:
        """Render as tilde wire-format tokens."""
        out = []
        for pfx in self.prefixes:
            name = "pe" if paper_exact and pfx == "per" else pfx
            out.append(name + "~")
        if self.redup:
            out.append("prl~")
        out.append(self.root)
        for suffix in (self.ds, self.pp, self.p):
            if suffix is not None:
                out.append("~" + suffix)
        return out


@dataclass(frozen=True)
class Passthrough:
    """A word that flows through unchanged (root, OOV, name, number...)."""

    text: str

    def tokens(self, paper_exact: bool = False) -> list:
        return [self.text]


def separate_word(word: str, lexicon: RootLexicon) -> Union[Segmentation, Passthrough]:
    """Decompose one lowercase token, or pass it through unchanged.

    Every returned segmentation is validated three ways: the root is in the
    lexicon, the prefix/suffix combination table permits it, and regenerating
    the surface from the segmentation reproduces the input exactly.
    """
    if not word:
        return Passthrough(word)
    if "-" in word:
        return _separate_hyphenated(word, lexicon)
    if not word.isalpha() or not word.islower():
        return Passthrough(word)
    if lexicon.contains(word):
        return Passthrough(word)
    candidates = _candidates(word, lexicon)
    if not candidates:
        return Passthrough(word)
    return select(candidates)


def _candidates(word: str, lexicon: RootLexicon) -> list:
    found = set()
    for core, ds, pp, p in rules.strip_suffix_chain(word):
        for prefixes, root in _prefix_parses(core, lexicon, MAX_PREFIXES):
            if not rules.is_allowed(prefixes, ds):
                continue
            seg = Segmentation(root=root, prefixes=prefixes, ds=ds, pp=pp, p=p)
            if seg.affix_count() == 0:
                continue
            if _regenerates(seg, word):
                found.add(seg)
    return list(found)


def _prefix_parses(surface: str, lexicon: RootLexicon, depth: int) -> list:
    parses = []
    if len(surface) >= MIN_ROOT_LEN and lexicon.contains(surface):
        parses.append(((), surface))
    if depth > 0:
        for pfx, rem, _rule in rules.strip_prefix_candidates(surface):
            if len(rem) < MIN_ROOT_LEN or len(rem) >= len(surface):
                continue
            for inner, root in _prefix_parses(rem, lexicon, depth - 1):
                parses.append(((pfx,) + inner, root))
    return parses


def _regenerates(seg: Segmentation, word: str) -> bool:
    try:
        return combiner.combine_word(seg) == word
    except NoGenerationRule:
        return False


def detect_reduplication(word: str, lexicon: RootLexicon):
    """(base root, redup flag) for X-Y words whose halves share a root."""
    seg = _separate_hyphenated(word, lexicon)
    if isinstance(seg, Segmentation) and seg.redup:
        return seg.root, True
    return word, False


def _separate_hyphenated(word: str, lexicon: RootLexicon) -> Union[Segmentation, Passthrough]:
    if word.count("-") != 1:
        return Passthrough(word)
    first, second = word.split("-")
    if not (first.isalpha() and second.isalpha() and first.islower() and second.islower()):
        return Passthrough(word)
    # Prefixes attach to the first copy, suffixes to the second.
    found = set()
    for prefixes, root in _prefix_parses(first, lexicon, MAX_PREFIXES):
        for core, ds, pp, p in rules.strip_suffix_chain(second):
            if core != root or not rules.is_allowed(prefixes, ds):
                continue
            seg = Segmentation(root=root, prefixes=prefixes, redup=True, ds=ds, pp=pp, p=p)
            if _regenerates(seg, word):
                found.add(seg)
    if not found:
        return Passthrough(word)
    return select(list(found))


def select(candidates: list) -> Segmentation:
    """Deterministic choice: fewest affixes, then longest root, then rendering."""
    if not candidates:
        raise ValueError("select() requires at least one candidate")
    return min(
        candidates,
        key=lambda s: (s.affix_count(), -len(s.root), " ".join(s.tokens())),
    )
