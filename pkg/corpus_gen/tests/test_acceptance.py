"""Acceptance check for the generator: the committed corpus regenerates
byte-identically under the pinned toolchain version, and every fixture
passes the sidecar-to-position self-check."""

from __future__ import annotations

import json
from contextlib import contextmanager
from pathlib import Path

import matplotlib
import pytest

from corpus_gen import check_fixture, generate_corpus, load_corpus

from conftest import CORPUS_FILE, FIXTURES


@contextmanager
def _criterion(capsys, name: str):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print("acceptance %s: FAIL" % name, flush=True)
        raise
    with capsys.disabled():
        print("acceptance %s: PASS" % name, flush=True)


def _fixture_pairs(root: Path):
    for sidecar in sorted(root.rglob("sidecar.json")):
        yield sidecar.with_name("chart.svg"), sidecar
    for sidecar in sorted(root.rglob("*.sidecar.json")):
        stem = sidecar.name[: -len(".sidecar.json")]
        yield sidecar.with_name(stem + ".svg"), sidecar


def _pinned_version(root: Path) -> str:
    any_sidecar = next(root.rglob("sidecar.json"))
    return json.loads(any_sidecar.read_text())["toolchain"]["matplotlib"]


def test_corpus_regenerates_and_self_checks(capsys, tmp_path):
    committed = FIXTURES.parent
    pinned = _pinned_version(FIXTURES)
    if matplotlib.__version__ != pinned:
        pytest.skip("corpus pinned to matplotlib %s, %s installed"
                    % (pinned, matplotlib.__version__))
    with _criterion(capsys, "corpus-generator"):
        corpus = load_corpus(CORPUS_FILE)
        generate_corpus(corpus, tmp_path)

        want = sorted(p.relative_to(committed)
                      for p in committed.rglob("*") if p.is_file())
        got = sorted(p.relative_to(tmp_path)
                     for p in tmp_path.rglob("*") if p.is_file())
        assert got == want

        for rel in want:
            assert (tmp_path / rel).read_bytes() == \
                (committed / rel).read_bytes(), str(rel)

        checked = 0
        for svg_path, sidecar_path in _fixture_pairs(FIXTURES):
            result = check_fixture(svg_path, sidecar_path)
            assert result.ok, "%s worst %.4f px" % (svg_path, result.worst)
            checked += 1
        assert checked == 19
