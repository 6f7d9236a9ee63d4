import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))           # tests/oracles.py
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))  # no-install runs

from prosched.lexicon import load_lexicon, load_mappings
from prosched.rules import load_rules

DATA = Path(__file__).parent.parent / "src" / "prosched" / "data"
FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def en_lexicon():
    with open(DATA / "lexicon_en.dict", "rb") as fh:
        return load_lexicon(fh)


@pytest.fixture(scope="session")
def en_mappings():
    with open(DATA / "mappings_en.tsv", "rb") as fh:
        return load_mappings(fh)


def _rules(language):
    with open(DATA / f"rules_{language}.rules", "rb") as fh:
        return load_rules(fh, language)


@pytest.fixture(scope="session")
def de_rules():
    return _rules("de")


@pytest.fixture(scope="session")
def hu_rules():
    return _rules("hu")


@pytest.fixture(scope="session")
def es_rules():
    return _rules("es")


@pytest.fixture(scope="session")
def cmn_rules():
    return _rules("cmn")


@pytest.fixture(scope="session")
def acronyms():
    lines = (DATA / "acronyms_en.txt").read_text(encoding="utf-8").splitlines()
    return frozenset(w.strip().upper() for w in lines
                     if w.strip() and not w.startswith("#"))
