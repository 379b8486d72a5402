"""Exception types shared across the package."""


class MorfoError(Exception):
    """Base class for all morfo errors."""


class EmptyLexicon(MorfoError):
    """Raised when a lexicon source yields zero root words."""


class EncodingError(MorfoError):
    """Raised when an input stream is not valid UTF-8."""


class NoGenerationRule(MorfoError):
    """No morphophonemic rule can realize a prefix on the given stem."""

    def __init__(self, prefix: str, stem: str):
        super().__init__(f"no generation rule for {prefix!r} on stem {stem!r}")
        self.prefix = prefix
        self.stem = stem


class DanglingAffix(MorfoError):
    """An affix mark in a token stream has no root to attach to."""

    def __init__(self, position: int, token: str = ""):
        super().__init__(f"dangling affix mark {token!r} at token {position}")
        self.position = position
        self.token = token


class LengthMismatch(MorfoError):
    """Hypothesis and reference corpora differ in length."""


class EmptyCorpus(MorfoError):
    """BLEU requested on an empty corpus."""


class EmptyInput(MorfoError):
    """BLEU requested on an empty sentence."""
