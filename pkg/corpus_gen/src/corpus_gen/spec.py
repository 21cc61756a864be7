"""Fixture specs and the corpus file that lists them."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .datasets import sample

CHART_TYPES = ("bar", "stackedBar", "groupedBar", "scatter", "line",
               "multiLine", "area", "stackedArea", "histogram")

SCENARIOS = ("weather-trio", "scatter-quartet", "crossfilter-trio")

CORPUS_SCHEMA = "chartseam-corpus/1"


class ToolchainMissing(Exception):
    """The requested plotting toolchain is unknown or not importable."""


class SpecError(ValueError):
    """A fixture or corpus description is malformed."""


@dataclass(frozen=True)
class FixtureSpec:
    """One chart to synthesize.

    The seed fully determines the dataset and therefore the output; a
    sidecar is always written alongside the SVG. The dataset is either
    the name of a sample or an inline (fields, rows) pair.
    """

    name: str
    chart_type: str
    toolchain: str
    dataset: object
    encodings: dict = field(default_factory=dict)
    seed: int = 0
    title: str = ""
    bins: tuple | None = None

    def __post_init__(self):
        if self.chart_type not in CHART_TYPES:
            raise SpecError("unknown chartType %r" % self.chart_type)
        if self.chart_type == "histogram" and not self.bins:
            raise SpecError("histogram %r needs bin edges" % self.name)
        for channel in self.encodings:
            if channel not in ("x", "y", "color"):
                raise SpecError("unknown channel %r" % channel)

    def data(self):
        """Resolve the dataset to (fields, rows)."""
        if isinstance(self.dataset, str):
            return sample(self.dataset, self.seed)
        fields, rows = self.dataset
        return list(fields), [list(r) for r in rows]


@dataclass(frozen=True)
class SuiteSpec:
    """A linked multi-chart scenario."""

    scenario: str
    toolchain: str
    seed: int = 0

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise SpecError("unknown scenario %r" % self.scenario)


@dataclass(frozen=True)
class Corpus:
    toolchain: str
    fixtures: tuple
    suites: tuple


def load_corpus(path) -> Corpus:
    """Read a corpus description from YAML."""
    raw = yaml.safe_load(Path(path).read_text())
    if not isinstance(raw, dict) or raw.get("schema") != CORPUS_SCHEMA:
        raise SpecError("not a corpus file (schema must be %r)" % CORPUS_SCHEMA)
    toolchain = raw.get("toolchain", "matplotlib")
    fixtures = []
    for entry in raw.get("fixtures", []):
        dataset = entry["dataset"]
        if isinstance(dataset, dict):
            dataset = (dataset["fields"], dataset["rows"])
        fixtures.append(FixtureSpec(
            name=entry["name"],
            chart_type=entry["chartType"],
            toolchain=entry.get("toolchain", toolchain),
            dataset=dataset,
            encodings=dict(entry.get("encodings", {})),
            seed=int(entry.get("seed", 0)),
            title=entry.get("title", ""),
            bins=tuple(entry["bins"]) if "bins" in entry else None,
        ))
    suites = []
    for entry in raw.get("suites", []):
        suites.append(SuiteSpec(
            scenario=entry["scenario"],
            toolchain=entry.get("toolchain", toolchain),
            seed=int(entry.get("seed", 0)),
        ))
    names = [f.name for f in fixtures] + [s.scenario for s in suites]
    if len(set(names)) != len(names):
        raise SpecError("duplicate fixture names in corpus")
    return Corpus(toolchain, tuple(fixtures), tuple(suites))
