import json

import pytest

from corpus_gen import FixtureSpec, SpecError, ToolchainMissing, generate
from corpus_gen.render import bin_counts, bin_label, render_fixture


def _scatter_spec():
    return FixtureSpec(name="scatter", chart_type="scatter",
                       toolchain="matplotlib", dataset="engines", seed=1,
                       encodings={"x": "power", "y": "efficiency"},
                       title="Engine efficiency")


def test_generate_writes_svg_and_sidecar(tmp_path):
    svg_path, sidecar_path = generate(_scatter_spec(), tmp_path)
    assert svg_path.name == "chart.svg" and svg_path.exists()
    sidecar = json.loads(sidecar_path.read_text())
    assert sidecar["schema"] == "chartseam-fixture/1"
    assert sidecar["markCount"] == 30
    assert len(sidecar["rows"]) == 30
    assert len(sidecar["axes"]) == 2
    assert "matplotlib" in sidecar["toolchain"]


def test_same_spec_twice_is_byte_identical():
    svg_a, side_a = render_fixture(_scatter_spec())
    svg_b, side_b = render_fixture(_scatter_spec())
    assert svg_a == svg_b
    assert side_a == side_b


def test_stacked_bar_records_stack_order():
    spec = FixtureSpec(name="stackedBar", chart_type="stackedBar",
                       toolchain="matplotlib", dataset="quarters", seed=5,
                       encodings={"x": "quarter", "y": "revenue",
                                  "color": "product"})
    _, sidecar = render_fixture(spec)
    fields, rows = spec.data()
    ci = [f["name"] for f in fields].index("product")
    first_seen = []
    for r in rows:
        if r[ci] not in first_seen:
            first_seen.append(r[ci])
    assert sidecar["seriesOrder"] == first_seen
    assert sidecar["legends"][0]["entries"] == first_seen
    assert sidecar["markCount"] == len(rows)


def test_histogram_bins_and_labels():
    spec = FixtureSpec(name="histogram", chart_type="histogram",
                       toolchain="matplotlib", dataset="durations", seed=9,
                       encodings={"x": "duration"},
                       bins=(0, 100, 200, 300, 400, 500, 600))
    _, sidecar = render_fixture(spec)
    assert sidecar["markCount"] == 6
    labels = [r[0] for r in sidecar["rows"]]
    assert all(lab.startswith("[") for lab in labels)
    assert all(lab.endswith(")") for lab in labels[:-1])
    assert labels[-1].endswith("]")
    assert sum(r[1] for r in sidecar["rows"]) == 80.0
    assert sidecar["bins"]["field"] == "duration"


def test_bin_counts_last_bin_closed():
    assert bin_counts([0.0, 5.0, 10.0], [0, 5, 10]) == [1, 2]
    assert bin_label(0, 5, False) == "[0, 5)"
    assert bin_label(5, 10, True) == "[5, 10]"


def test_categorical_axis_lists_categories():
    spec = FixtureSpec(name="bar", chart_type="bar", toolchain="matplotlib",
                       dataset="regions", seed=4,
                       encodings={"x": "region", "y": "sales"})
    svg, sidecar = render_fixture(spec)
    x_axis = sidecar["axes"][0]
    assert x_axis["scaleKind"] == "categorical"
    fields, rows = spec.data()
    assert x_axis["tickLabels"] == [r[0] for r in rows]
    for name in x_axis["tickLabels"]:
        assert name.encode() in svg


def test_unknown_toolchain_rejected():
    spec = FixtureSpec(name="x", chart_type="line", toolchain="gnuplot",
                       dataset="traffic", seed=2,
                       encodings={"x": "hour", "y": "visits"})
    with pytest.raises(ToolchainMissing):
        render_fixture(spec)


def test_histogram_requires_bins():
    with pytest.raises(SpecError):
        FixtureSpec(name="h", chart_type="histogram", toolchain="matplotlib",
                    dataset="durations", seed=9, encodings={"x": "duration"})


def test_unknown_channel_rejected():
    with pytest.raises(SpecError):
        FixtureSpec(name="s", chart_type="scatter", toolchain="matplotlib",
                    dataset="engines", seed=1,
                    encodings={"x": "power", "size": "efficiency"})


def test_incomplete_series_grid_rejected():
    fields = [{"name": "cat", "type": "text"},
              {"name": "series", "type": "text"},
              {"name": "v", "type": "number"}]
    rows = [["a", "s1", 1.0], ["a", "s2", 2.0], ["b", "s1", 3.0]]
    spec = FixtureSpec(name="bad", chart_type="stackedBar",
                       toolchain="matplotlib", dataset=(fields, rows),
                       encodings={"x": "cat", "y": "v", "color": "series"})
    with pytest.raises(SpecError):
        render_fixture(spec)


def test_title_and_encodings_recorded(tmp_path):
    _, sidecar_path = generate(_scatter_spec(), tmp_path)
    sidecar = json.loads(sidecar_path.read_text())
    assert sidecar["title"] == "Engine efficiency"
    assert sidecar["encodings"] == {"x": "power", "y": "efficiency"}
    assert sidecar["seed"] == 1
