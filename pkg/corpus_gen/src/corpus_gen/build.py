"""Build a whole corpus from its YAML description."""

from __future__ import annotations

from pathlib import Path

from .render import generate
from .spec import Corpus
from .suites import generate_linked_suite


def generate_corpus(corpus: Corpus, out_root, only: str | None = None) -> list:
    """Write every fixture and suite under out_root/<toolchain>/...

    Standalone fixtures land in <toolchain>/<name>/, linked suites in
    <toolchain>/linked/<scenario>/. Returns the directories written.
    """
    root = Path(out_root)
    written = []
    for spec in corpus.fixtures:
        if only and spec.name != only:
            continue
        out = root / spec.toolchain / spec.name
        generate(spec, out)
        written.append(out)
    for suite in corpus.suites:
        if only and suite.scenario != only:
            continue
        out = root / suite.toolchain / "linked" / suite.scenario
        generate_linked_suite(suite, out)
        written.append(out)
    return written
