"""Root-word dictionary that validates every segmentation."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import EmptyLexicon, EncodingError


def _normalize(word: str) -> str:
    return unicodedata.normalize("NFC", word).lower()


@dataclass(frozen=True)
class RootLexicon:
    """Immutable set of lowercase, NFC-normalized Indonesian root words."""

    roots: frozenset = field(default_factory=frozenset)
    source_path: str = "<stream>"

    def contains(self, word: str) -> bool:
        return _normalize(word) in self.roots

    def __contains__(self, word: str) -> bool:
        return self.contains(word)

    def __len__(self) -> int:
        return len(self.roots)


def load_lexicon(source, source_path: str | None = None) -> RootLexicon:
    """Load a lexicon from a path or an iterable of lines.

    One root per line; blank lines and lines starting with '#' are skipped.
    Internal spaces are removed so compound roots become single tokens.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except UnicodeDecodeError as exc:
            raise EncodingError(f"{path}: {exc}") from exc
        return _from_lines(lines, source_path or str(path))
    return _from_lines(source, source_path or "<stream>")


def _from_lines(lines: Iterable[str], source_path: str) -> RootLexicon:
    roots = set()
    for raw in lines:
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise EncodingError(str(exc)) from exc
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entry = _normalize("".join(line.split()))
        if entry:
            roots.add(entry)
    if not roots:
        raise EmptyLexicon(f"no roots loaded from {source_path}")
    return RootLexicon(roots=frozenset(roots), source_path=source_path)
