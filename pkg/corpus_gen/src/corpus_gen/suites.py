"""Linked multi-chart scenarios: several views over one external table.

Each suite writes the external CSV, one SVG plus sidecar per chart, a
manifest naming them, and the expected link graph. The expected graph
is ground truth by construction: direct links list the fields two views
share, transform links record the recipe that produced a derived view.
"""

from __future__ import annotations

import csv
import json
import statistics
from pathlib import Path

from .render import render_fixture, write_sidecar
from .spec import FixtureSpec, SpecError, SuiteSpec
from .datasets import sample

SUITE_SCHEMA = "chartseam-suite/1"
LINKS_SCHEMA = "chartseam-links-expected/1"


def _project(fields, rows, names):
    idx = [next(i for i, f in enumerate(fields) if f["name"] == n)
           for n in names]
    kept = [dict(fields[i]) for i in idx]
    return kept, [[r[i] for i in idx] for r in rows]


def _group_order(rows, gi):
    order = []
    for r in rows:
        if r[gi] not in order:
            order.append(r[gi])
    return order


def groupby_sum(fields, rows, group: str, value: str):
    """Aggregate table [[group, sum]] in first-seen group order."""
    gi = next(i for i, f in enumerate(fields) if f["name"] == group)
    vi = next(i for i, f in enumerate(fields) if f["name"] == value)
    out_fields = [{"name": group, "type": "text"},
                  {"name": "sum_%s" % value, "type": "number"}]
    out_rows = [[g, round(sum(r[vi] for r in rows if r[gi] == g), 6)]
                for g in _group_order(rows, gi)]
    return out_fields, out_rows


def groupby_stdev(fields, rows, group: str, value: str):
    """Sample standard deviation per group, n - 1 in the denominator."""
    gi = next(i for i, f in enumerate(fields) if f["name"] == group)
    vi = next(i for i, f in enumerate(fields) if f["name"] == value)
    out_fields = [{"name": group, "type": "text"},
                  {"name": "stdev_%s" % value, "type": "number"}]
    out_rows = []
    for g in _group_order(rows, gi):
        values = [r[vi] for r in rows if r[gi] == g]
        out_rows.append([g, round(statistics.stdev(values), 6)])
    return out_fields, out_rows


def _write_csv(path: Path, fields, rows) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f["name"] for f in fields])
        for r in rows:
            writer.writerow(r)


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


def _emit_chart(out: Path, stem: str, spec: FixtureSpec) -> None:
    svg, sidecar = render_fixture(spec)
    (out / (stem + ".svg")).write_bytes(svg)
    write_sidecar(sidecar, out / (stem + ".sidecar.json"))


def _direct(a: str, b: str, fields) -> dict:
    return {"a": a, "b": b, "fields": [[f, f] for f in sorted(fields)],
            "kind": "direct"}


def _transform(source: str, target: str, groupby, op, agg_field,
               derive=None) -> dict:
    return {"kind": "transform", "source": source, "target": target,
            "transform": {"aggregate": {"field": agg_field, "op": op},
                          "derive": derive, "groupby": list(groupby)}}


def _weather_trio(suite: SuiteSpec, out: Path) -> dict:
    fields, rows = sample("weather", suite.seed)
    _write_csv(out / "external.csv", fields, rows)

    for stem, value, title in [("scatter_temp", "temp_max", "Max temperature"),
                               ("scatter_wind", "wind", "Daily wind")]:
        part = _project(fields, rows, ["date", value, "weather"])
        _emit_chart(out, stem, FixtureSpec(
            name=stem, chart_type="scatter", toolchain=suite.toolchain,
            dataset=part, seed=suite.seed, title=title,
            encodings={"x": "date", "y": value, "color": "weather"}))

    agg = groupby_sum(fields, rows, "weather", "temp_max")
    _emit_chart(out, "bar_weather", FixtureSpec(
        name="bar_weather", chart_type="bar", toolchain=suite.toolchain,
        dataset=agg, seed=suite.seed, title="Total max temperature",
        encodings={"x": "weather", "y": "sum_temp_max"}))

    links = [
        _direct("scatter_temp.svg", "scatter_wind.svg", ["date", "weather"]),
        _direct("external.csv", "scatter_temp.svg",
                ["date", "temp_max", "weather"]),
        _direct("external.csv", "scatter_wind.svg",
                ["date", "wind", "weather"]),
        _transform("external.csv", "bar_weather.svg", ["weather"],
                   "sum", "temp_max"),
    ]
    return {"charts": ["scatter_temp.svg", "scatter_wind.svg",
                       "bar_weather.svg"],
            "data": ["external.csv"], "links": links}


def _scatter_quartet(suite: SuiteSpec, out: Path) -> dict:
    fields, rows = sample("sensors", suite.seed)
    _write_csv(out / "external.csv", fields, rows)

    pairs = [("temp", "humidity"), ("pressure", "wind"),
             ("solar", "dust"), ("noise", "co2")]
    charts = []
    links = []
    for x, y in pairs:
        stem = "scatter_%s_%s" % (x, y)
        part = _project(fields, rows, [x, y])
        _emit_chart(out, stem, FixtureSpec(
            name=stem, chart_type="scatter", toolchain=suite.toolchain,
            dataset=part, seed=suite.seed,
            title="%s vs %s" % (x, y), encodings={"x": x, "y": y}))
        charts.append(stem + ".svg")
        links.append(_direct("external.csv", stem + ".svg", [x, y]))
    return {"charts": charts, "data": ["external.csv"], "links": links}


def _crossfilter_trio(suite: SuiteSpec, out: Path) -> dict:
    fields, rows = sample("flights", suite.seed)
    _write_csv(out / "flights.csv", fields, rows)

    bins = {"distance": [0, 200, 400, 600, 800, 1000],
            "delay": [-20, 0, 20, 40, 60]}
    for field, title in [("distance", "Flight distance"),
                         ("delay", "Departure delay")]:
        stem = "hist_%s" % field
        part = _project(fields, rows, [field])
        _emit_chart(out, stem, FixtureSpec(
            name=stem, chart_type="histogram", toolchain=suite.toolchain,
            dataset=part, seed=suite.seed, title=title,
            encodings={"x": field}, bins=tuple(bins[field])))

    agg = groupby_stdev(fields, rows, "carrier", "delay")
    _emit_chart(out, "bar_carrier", FixtureSpec(
        name="bar_carrier", chart_type="bar", toolchain=suite.toolchain,
        dataset=agg, seed=suite.seed, title="Delay spread by carrier",
        encodings={"x": "carrier", "y": "stdev_delay"}))

    links = [
        _transform("flights.csv", "hist_distance.svg", ["distance_bin"],
                   "count", None,
                   derive={"edges": bins["distance"], "field": "distance"}),
        _transform("flights.csv", "hist_delay.svg", ["delay_bin"],
                   "count", None,
                   derive={"edges": bins["delay"], "field": "delay"}),
        _transform("flights.csv", "bar_carrier.svg", ["carrier"],
                   "stdev", "delay"),
    ]
    return {"charts": ["hist_distance.svg", "hist_delay.svg",
                       "bar_carrier.svg"],
            "data": ["flights.csv"], "links": links}


_SCENARIOS = {
    "weather-trio": _weather_trio,
    "scatter-quartet": _scatter_quartet,
    "crossfilter-trio": _crossfilter_trio,
}


def generate_linked_suite(suite: SuiteSpec, out_dir) -> Path:
    """Write a scenario's fixtures into out_dir; returns the manifest path."""
    try:
        build = _SCENARIOS[suite.scenario]
    except KeyError:
        raise SpecError("unknown scenario %r" % suite.scenario) from None
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    result = build(suite, out)
    manifest = {"charts": result["charts"], "data": result["data"],
                "schema": SUITE_SCHEMA}
    manifest_path = out / "manifest.json"
    _write_json(manifest_path, manifest)
    _write_json(out / "expected_links.json",
                {"links": result["links"], "schema": LINKS_SCHEMA})
    return manifest_path
