"""Synthesize SVG chart fixtures with ground-truth sidecars."""

from .build import generate_corpus
from .datasets import SAMPLES, sample
from .render import generate, render_fixture
from .selfcheck import CheckError, CheckResult, check, check_fixture
from .spec import (Corpus, FixtureSpec, SpecError, SuiteSpec,
                   ToolchainMissing, load_corpus)
from .suites import generate_linked_suite

__all__ = [
    "CheckError", "CheckResult", "Corpus", "FixtureSpec", "SAMPLES",
    "SpecError", "SuiteSpec", "ToolchainMissing", "check", "check_fixture",
    "generate", "generate_corpus", "generate_linked_suite", "load_corpus",
    "render_fixture", "sample",
]
