from __future__ import annotations

import json
from pathlib import Path

import pytest

from chartseam.cli import main
from chartseam.svgdoc import parse_svg_file, write_svg

from conftest import FIXTURES

WEATHER = FIXTURES / "linked" / "weather_trio"
CROSSFILTER = FIXTURES / "linked" / "crossfilter_trio"


def _weather_args(folder=WEATHER):
    manifest = json.loads((folder / "manifest.json").read_text())
    charts = [str(folder / c) for c in manifest["charts"]]
    data = []
    for d in manifest["data"]:
        data += ["--data", str(folder / d)]
    return charts, data


def test_deconstruct_writes_sidecar_shaped_json(tmp_path, capsys):
    rc = main(["deconstruct", str(FIXTURES / "scatter_basic" / "chart.svg"),
               "--out", str(tmp_path)])
    assert rc == 0
    record = json.loads((tmp_path / "chart.json").read_text())
    assert record["schema"] == "chartseam/1"
    for key in ("axes", "legends", "marks", "table", "diagnostics"):
        assert key in record
    assert record["table"]["rows"]


def test_deconstruct_to_stdout(capsys):
    rc = main(["deconstruct", str(FIXTURES / "bar_basic" / "chart.svg")])
    assert rc == 0
    record = json.loads(capsys.readouterr().out)
    assert record["schema"] == "chartseam/1"


def test_deconstruct_missing_file_is_input_error(tmp_path):
    rc = main(["deconstruct", str(tmp_path / "nope.svg")])
    assert rc == 1


def test_deconstruct_malformed_xml_is_input_error(tmp_path):
    bad = tmp_path / "bad.svg"
    bad.write_text("<svg><rect</svg>")
    assert main(["deconstruct", str(bad)]) == 1


def test_deconstruct_non_chart_degrades(tmp_path):
    blank = tmp_path / "blank.svg"
    blank.write_text('<svg xmlns="http://www.w3.org/2000/svg" '
                     'width="10" height="10"/>')
    rc = main(["deconstruct", str(blank), "--out", str(tmp_path)])
    assert rc == 2


def test_unknown_subcommand_is_input_error(capsys):
    assert main(["bogus"]) == 1


def test_link_needs_two_tables(capsys):
    assert main(["link", str(FIXTURES / "bar_basic" / "chart.svg")]) == 1


def test_link_weather_trio(tmp_path):
    charts, data = _weather_args()
    rc = main(["link", *charts, *data, "--out", str(tmp_path)])
    assert rc == 0
    graph = json.loads((tmp_path / "links.json").read_text())
    assert graph["schema"] == "chartseam/1"
    kinds = sorted(l["kind"] for l in graph["links"])
    assert kinds == ["direct", "direct", "direct", "transform"]
    names = {n["name"] for n in graph["nodes"]}
    assert "external.csv" in names


def test_replay_script_produces_outputs(tmp_path):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 0, "target": "background", "type": "select",
             "input": "drag", "x": 0, "y": 0, "x1": 760, "y1": 500},
        ],
    }))
    out = tmp_path / "out"
    rc = main(["replay", *charts, *data, "--script", str(script),
               "--out", str(out)])
    assert rc == 0
    svgs = sorted(p.name for p in out.glob("*.svg"))
    assert svgs == ["bar_weather.svg", "scatter_temp.svg", "scatter_wind.svg"]
    assert (out / "tooltips.json").exists()
    csvs = sorted(p.name for p in out.glob("*.selected.csv"))
    assert "scatter_temp.selected.csv" in csvs
    log = json.loads((out / "tooltips.json").read_text())
    assert log["schema"] == "chartseam/1"
    assert log["events"][0]["step"] == 0
    assert log["events"][0]["selected"]


def test_replay_is_deterministic(tmp_path):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 2, "target": "axis", "type": "sort", "input": "click",
             "mode": "desc"},
            {"chart": 0, "target": "background", "type": "navigate",
             "input": "dblclick", "x": 300, "y": 200},
        ],
    }))
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert main(["replay", *charts, *data, "--script", str(script),
                     "--out", str(out)]) == 0
        outs.append({p.name: p.read_bytes() for p in out.glob("*.svg")})
    assert outs[0] == outs[1]


def test_replay_empty_script_is_write_normalization(tmp_path):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({"schema": "chartseam-script/1", "steps": []}))
    out = tmp_path / "out"
    assert main(["replay", *charts, *data, "--script", str(script),
                 "--out", str(out)]) == 0
    for chart in charts:
        want = write_svg(parse_svg_file(chart))
        got = (out / Path(chart).name).read_bytes()
        assert got == want


def test_replay_every_step_snapshots(tmp_path):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 2, "target": "axis", "type": "sort", "input": "click"},
            {"chart": 0, "target": "background", "type": "select",
             "input": "click", "x": 1, "y": 1},
        ],
    }))
    out = tmp_path / "out"
    assert main(["replay", *charts, *data, "--script", str(script),
                 "--out", str(out), "--every-step"]) == 0
    assert (out / "step_00").is_dir()
    assert (out / "step_01").is_dir()
    assert sorted(p.name for p in (out / "step_00").glob("*.svg"))


def test_replay_rejects_wrong_schema(tmp_path):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({"schema": "wrong/9", "steps": []}))
    assert main(["replay", *charts, *data, "--script", str(script),
                 "--out", str(tmp_path / "out")]) == 1


def test_replay_names_failing_step(tmp_path, capsys):
    charts, data = _weather_args()
    script = tmp_path / "script.json"
    script.write_text(json.dumps({
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 0, "target": "background", "type": "select",
             "input": "click", "x": 1, "y": 1},
            {"chart": 7, "target": "background", "type": "select",
             "input": "click", "x": 1, "y": 1},
        ],
    }))
    rc = main(["replay", *charts, *data, "--script", str(script),
               "--out", str(tmp_path / "out")])
    assert rc == 1
    err = capsys.readouterr().err
    assert "step 1" in err


def test_replay_missing_script_flag_is_input_error():
    charts, data = _weather_args()
    assert main(["replay", *charts, *data]) == 1


def test_selected_csv_contains_selection(tmp_path):
    manifest = json.loads((CROSSFILTER / "manifest.json").read_text())
    charts = [str(CROSSFILTER / c) for c in manifest["charts"]]
    data = []
    for d in manifest["data"]:
        data += ["--data", str(CROSSFILTER / d)]
    out = tmp_path / "out"
    assert main(["replay", *charts, *data,
                 "--script", str(CROSSFILTER / "script.json"),
                 "--out", str(out)]) == 0
    text = (out / "hist_distance.selected.csv").read_text()
    lines = text.strip().splitlines()
    assert lines[0] == "distance,count"
    assert len(lines) == 2
