from __future__ import annotations

import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_dirs() -> list[Path]:
    out = []
    for child in sorted(FIXTURES.iterdir()):
        if (child / "chart.svg").exists():
            out.append(child)
    return out


def load_sidecar(folder: Path) -> dict:
    with open(folder / "sidecar.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def linked_dir() -> Path:
    return FIXTURES / "linked"
