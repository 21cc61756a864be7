import json

import pytest

from corpus_gen import CheckError, FixtureSpec, check, render_fixture

SPECS = {
    "scatter": dict(dataset="engines", seed=1,
                    encodings={"x": "power", "y": "efficiency"}),
    "line": dict(dataset="traffic", seed=2,
                 encodings={"x": "hour", "y": "visits"}),
    "multiLine": dict(dataset="channels", seed=3,
                      encodings={"x": "day", "y": "visits",
                                 "color": "channel"}),
    "bar": dict(dataset="regions", seed=4,
                encodings={"x": "region", "y": "sales"}),
    "stackedBar": dict(dataset="quarters", seed=5,
                       encodings={"x": "quarter", "y": "revenue",
                                  "color": "product"}),
    "groupedBar": dict(dataset="rainfall", seed=6,
                       encodings={"x": "city", "y": "rainfall",
                                  "color": "season"}),
    "area": dict(dataset="volume", seed=7,
                 encodings={"x": "week", "y": "volume"}),
    "stackedArea": dict(dataset="segments", seed=8,
                        encodings={"x": "month", "y": "users",
                                   "color": "segment"}),
    "histogram": dict(dataset="durations", seed=9,
                      encodings={"x": "duration"},
                      bins=(0, 100, 200, 300, 400, 500, 600)),
}


def _render(chart_type):
    spec = FixtureSpec(name=chart_type, chart_type=chart_type,
                       toolchain="matplotlib", **SPECS[chart_type])
    return render_fixture(spec)


@pytest.mark.parametrize("chart_type", sorted(SPECS))
def test_positions_reproduce_from_sidecar(chart_type):
    svg, sidecar = _render(chart_type)
    result = check(svg, sidecar, chart_type)
    assert result.ok, "worst error %.4f px" % result.worst
    assert result.worst < 1e-3


def test_detects_shifted_mark():
    svg, sidecar = _render("scatter")
    text = svg.decode()
    start = text.index('<g id="marks">')
    at = text.index(' x="', start) + len(' x="')
    end = text.index('"', at)
    moved = float(text[at:end]) + 3.0
    tampered = (text[:at] + "%.6f" % moved + text[end:]).encode()
    result = check(tampered, sidecar, "tampered")
    assert not result.ok
    assert result.worst == pytest.approx(3.0, abs=1e-3)


def test_detects_changed_row_value():
    svg, sidecar = _render("bar")
    sidecar = json.loads(json.dumps(sidecar))
    sidecar["rows"][2][1] += 5.0
    assert not check(svg, sidecar, "row-tamper").ok


def test_missing_mark_group_is_structural_error():
    svg, sidecar = _render("bar")
    tampered = svg.replace(b'id="mark-3"', b'id="mark-x"')
    with pytest.raises(CheckError):
        check(tampered, sidecar, "missing-group")


def test_row_count_mismatch_is_structural_error():
    svg, sidecar = _render("scatter")
    sidecar = json.loads(json.dumps(sidecar))
    sidecar["rows"] = sidecar["rows"][:-1]
    with pytest.raises(CheckError):
        check(svg, sidecar, "short-rows")
