from pathlib import Path

import pytest

from morfo import load_lexicon

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
LEXICON_PATH = DATA_DIR / "root_words.txt"
CORPUS_PATH = DATA_DIR / "sample_corpus.id.txt"


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(LEXICON_PATH)


@pytest.fixture(scope="session")
def corpus_lines():
    return CORPUS_PATH.read_text(encoding="utf-8").splitlines()
