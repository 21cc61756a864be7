from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
CORPUS_FILE = ROOT / "corpus.yaml"
FIXTURES = ROOT / "fixtures" / "matplotlib"


@pytest.fixture(scope="session")
def corpus_root() -> Path:
    return ROOT


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
