from __future__ import annotations

import math
from datetime import datetime
from pathlib import Path

from chartseam.infer import infer_table
from chartseam.metadata import deconstruct
from chartseam.svgdoc import parse_svg, parse_svg_file
from chartseam.table import ROW_INDEX_FIELD

from conftest import FIXTURES, load_sidecar


def _infer(folder: Path):
    doc = parse_svg_file(folder / "chart.svg")
    return infer_table(deconstruct(doc))


def _tolerances(sidecar) -> dict[str, float]:
    """1% of each numeric column's range, from the sidecar rows."""
    out = {}
    for i, field in enumerate(sidecar["fields"]):
        if field["type"] != "number":
            continue
        col = [row[i] for row in sidecar["rows"]]
        out[field["name"]] = 0.01 * (max(col) - min(col))
    return out


def _match_rows(inferred, sidecar) -> tuple[int, int]:
    """Greedy one-to-one match of sidecar rows against inferred rows."""
    tol = _tolerances(sidecar)
    names = [f["name"] for f in sidecar["fields"]]
    cols = [inferred.table.field_index(n) for n in names]
    used = set()
    matched = 0
    for srow in sidecar["rows"]:
        for i, irow in enumerate(inferred.table.rows):
            if i in used:
                continue
            ok = True
            for name, c, want in zip(names, cols, srow):
                got = irow[c]
                if isinstance(got, datetime):
                    ok = got.strftime("%Y-%m-%d") == str(want)
                elif isinstance(want, (int, float)):
                    ok = isinstance(got, (int, float)) and \
                        abs(got - want) <= max(tol.get(name, 0.0), 1e-9)
                else:
                    ok = got == want
                if not ok:
                    break
            if ok:
                used.add(i)
                matched += 1
                break
    return matched, len(sidecar["rows"])


def test_scatter_rows_match_sidecar():
    folder = FIXTURES / "scatter_basic"
    matched, total = _match_rows(_infer(folder), load_sidecar(folder))
    assert matched == total


def test_bar_values_signed_against_baseline():
    inferred = _infer(FIXTURES / "bar_diverging")
    values = inferred.table.column(inferred.field_for_role("y"))
    assert any(v < 0 for v in values) and any(v > 0 for v in values)
    matched, total = _match_rows(inferred, load_sidecar(FIXTURES / "bar_diverging"))
    assert matched == total


def test_histogram_bins_labelled_half_open():
    inferred = _infer(FIXTURES / "histogram_counts")
    labels = inferred.table.column(inferred.table.field_names[0])
    assert all(lbl.startswith("[") for lbl in labels)
    assert sum(1 for lbl in labels if lbl.endswith(")")) == len(labels) - 1
    assert sum(1 for lbl in labels if lbl.endswith("]")) == 1


def test_line_chart_row_per_vertex():
    inferred = _infer(FIXTURES / "line_basic")
    sidecar = load_sidecar(FIXTURES / "line_basic")
    assert len(inferred.table.rows) == len(sidecar["rows"])
    # a single line mark owns every row
    assert len(inferred.mark_rows) == 1
    (rows,) = inferred.mark_rows.values()
    assert sorted(rows) == list(range(len(inferred.table.rows)))


def test_date_axis_snaps_to_midnight():
    inferred = _infer(FIXTURES / "line_basic")
    dates = inferred.table.column("date")
    assert all(isinstance(d, datetime) for d in dates)
    assert all((d.hour, d.minute, d.second) == (0, 0, 0) for d in dates)


def test_area_rows_match_sidecar():
    folder = FIXTURES / "area_basic"
    matched, total = _match_rows(_infer(folder), load_sidecar(folder))
    assert matched == total


def test_stacked_bar_segments_not_cumulative():
    folder = FIXTURES / "bar_stacked"
    matched, total = _match_rows(_infer(folder), load_sidecar(folder))
    assert matched == total


def test_scatter_color_field_named_from_legend_title():
    inferred = _infer(FIXTURES / "scatter_color")
    for field in load_sidecar(FIXTURES / "scatter_color")["fields"]:
        assert inferred.table.has_field(field["name"])
    assert inferred.field_for_role("color") == "rock"


def test_scatter_size_field_from_legend():
    inferred = _infer(FIXTURES / "scatter_size")
    assert inferred.field_for_role("size") == "magnitude"
    magnitudes = inferred.table.column("magnitude")
    assert all(isinstance(v, float) for v in magnitudes)


def test_row_mark_maps_are_mutual():
    inferred = _infer(FIXTURES / "scatter_basic")
    for row, mark_ids in enumerate(inferred.row_marks):
        for mid in mark_ids:
            assert row in inferred.mark_rows[mid]
    for mid, rows in inferred.mark_rows.items():
        for row in rows:
            assert mid in inferred.row_marks[row]


def test_field_names_fall_back_to_roles():
    svg = (
        '<svg xmlns="http://www.w3.org/2000/svg" width="200" height="150">'
        '<line x1="30" y1="120" x2="180" y2="120" stroke="#333"/>'
        '<line x1="30" y1="20" x2="30" y2="120" stroke="#333"/>'
        + "".join('<line x1="%d" y1="120" x2="%d" y2="126" stroke="#333"/>'
                  '<text x="%d" y="138" font-size="10" text-anchor="middle">%d</text>'
                  % (x, x, x, v) for x, v in [(30, 0), (80, 5), (130, 10), (180, 15)])
        + "".join('<line x1="24" y1="%d" x2="30" y2="%d" stroke="#333"/>'
                  '<text x="20" y="%d" font-size="10" text-anchor="end">%d</text>'
                  % (y, y, y + 4, v) for y, v in [(120, 0), (70, 50), (20, 100)])
        + '<circle cx="80" cy="70" r="3" fill="steelblue"/>'
          '<circle cx="130" cy="45" r="3" fill="steelblue"/>'
          '<circle cx="55" cy="95" r="3" fill="steelblue"/>'
        '</svg>')
    inferred = infer_table(deconstruct(parse_svg(svg)))
    assert inferred.table.field_names == ["x", "y"]
    xs = sorted(inferred.table.column("x"))
    assert all(math.isclose(a, b, abs_tol=0.2)
               for a, b in zip(xs, [2.5, 5.0, 10.0]))


def test_row_index_field_name_reserved():
    inferred = _infer(FIXTURES / "scatter_basic")
    assert ROW_INDEX_FIELD == "__index__"
    assert not inferred.table.has_field(ROW_INDEX_FIELD)
