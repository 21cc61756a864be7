from __future__ import annotations

import json
from pathlib import Path

import pytest

from chartseam.errors import ReplayError
from chartseam.events import Step
from chartseam.query import ViewTransform
from chartseam.session import Session

from conftest import FIXTURES


def _weather_session() -> Session:
    folder = FIXTURES / "linked" / "weather_trio"
    manifest = json.loads((folder / "manifest.json").read_text())
    charts = [str(folder / name) for name in manifest["charts"]]
    data = [str(folder / name) for name in manifest["data"]]
    return Session(charts, data)


def _crossfilter_session() -> Session:
    folder = FIXTURES / "linked" / "crossfilter_trio"
    manifest = json.loads((folder / "manifest.json").read_text())
    charts = [str(folder / name) for name in manifest["charts"]]
    data = [str(folder / name) for name in manifest["data"]]
    return Session(charts, data)


def _click(session: Session, chart: int, mark_index: int, **kw) -> Step:
    state = session.charts[chart]
    box = state.md.data_marks[mark_index].bbox
    return Step(chart, "mark", kw.pop("type", "select"), "click",
                x=box.center_x, y=box.center_y, **kw)


@pytest.fixture(scope="module")
def weather():
    return _weather_session()


def test_selection_starts_as_none(weather):
    for state in weather.charts:
        assert state.selection is None


def test_select_propagates_to_linked_charts():
    session = _weather_session()
    changed = session.apply(_click(session, 0, 0))
    assert 0 in changed and 1 in changed
    assert session.charts[0].selection is not None
    assert session.charts[1].selection is not None
    assert session.charts[2].overlay is not None


def test_reselect_refines_within_current_selection():
    session = _weather_session()
    state = session.charts[0]
    temp = state.inferred.field_for_role("y")
    lo = min(state.inferred.table.column(temp))
    hi = max(state.inferred.table.column(temp))
    wide = Step(0, "background", "select", "drag",
                x=0.0, y=0.0, x1=state.doc.width, y1=state.doc.height)
    session.apply(wide)
    first = set(session.charts[0].selection)
    # brushing again intersects with what is already selected
    xs = state.md.x_axis.scale
    ys = state.md.y_axis.scale
    narrow = Step(0, "background", "select", "drag",
                  x=xs.apply(xs.domain[0]), y=ys.apply(hi),
                  x1=xs.apply(xs.domain[1]),
                  y1=(ys.apply(hi) + ys.apply(lo)) / 2)
    session.apply(narrow)
    second = set(session.charts[0].selection)
    assert second <= first
    assert second != first


def test_meta_click_toggles_membership():
    session = _weather_session()
    session.apply(_click(session, 0, 0))
    base = set(session.charts[0].selection)
    session.apply(_click(session, 0, 5, meta=True))
    grown = set(session.charts[0].selection)
    assert base < grown
    session.apply(_click(session, 0, 5, meta=True))
    assert set(session.charts[0].selection) == base


def test_background_click_clears_everywhere():
    session = _weather_session()
    session.apply(_click(session, 0, 0))
    assert session.charts[1].selection is not None
    session.apply(Step(0, "background", "select", "click", x=2.0, y=2.0))
    for state in session.charts:
        assert state.selection is None
        assert state.overlay is None


def test_empty_selection_differs_from_no_selection():
    session = _weather_session()
    state = session.charts[0]
    step = Step(0, "background", "select", "drag",
                x=-40.0, y=-40.0, x1=-30.0, y1=-30.0)
    session.apply(step)
    assert session.charts[0].selection == []
    assert session.charts[0].selection is not None


def test_filter_hides_rows_and_clears_selection():
    session = _crossfilter_session()
    session.apply(_click(session, 0, 0))
    assert session.charts[0].selection is not None
    session.apply(_click(session, 0, 0, type="filter"))
    assert session.charts[0].hidden
    for state in session.charts:
        assert state.selection is None
    # downstream charts hide rows whose groups emptied
    assert any(state.hidden for i, state in enumerate(session.charts) if i != 0)


def test_filters_compose():
    session = _crossfilter_session()
    session.apply(_click(session, 0, 0, type="filter", mode="remove"))
    first = set(session.charts[0].hidden)
    session.apply(_click(session, 0, 1, type="filter", mode="remove"))
    second = set(session.charts[0].hidden)
    assert first < second


def test_filter_reset_restores_all_rows():
    session = _crossfilter_session()
    session.apply(_click(session, 0, 0, type="filter"))
    assert any(state.hidden for state in session.charts)
    session.apply(Step(0, "background", "filter", "click", mode="reset"))
    for state in session.charts:
        assert not state.hidden


def test_filter_keep_matches_manual_predicate():
    session = _crossfilter_session()
    state = session.charts[0]
    rows = state.inferred.mark_rows[state.md.data_marks[0].index]
    session.apply(_click(session, 0, 0, type="filter"))
    expected_hidden = set(range(state.row_count)) - set(rows)
    assert state.hidden == expected_hidden


def test_selection_after_filter_only_sees_live_rows():
    session = _crossfilter_session()
    session.apply(_click(session, 0, 0, type="filter", mode="remove"))
    hidden = set(session.charts[0].hidden)
    state = session.charts[0]
    wide = Step(0, "background", "select", "drag",
                x=0.0, y=0.0, x1=state.doc.width, y1=state.doc.height)
    session.apply(wide)
    assert not (set(session.charts[0].selection) & hidden)


def test_sort_is_chart_local():
    session = _weather_session()
    changed = session.apply(Step(2, "axis", "sort", "click", mode="desc"))
    assert changed == [2]
    state = session.charts[2]
    assert state.order is not None
    values = state.inferred.table.column(state.inferred.field_for_role("y"))
    ordered = [values[i] for i in state.order]
    assert ordered == sorted(values, reverse=True)


def test_navigate_composes_and_resets():
    session = _weather_session()
    zoom = Step(0, "background", "navigate", "dblclick", x=100.0, y=100.0)
    session.apply(zoom)
    t1 = session.charts[0].transform
    assert t1.k == pytest.approx(2.0)
    session.apply(zoom)
    t2 = session.charts[0].transform
    assert t2.k == pytest.approx(4.0)
    session.apply(Step(0, "background", "navigate", "dblclick", mode="reset"))
    assert session.charts[0].transform == ViewTransform()


def test_navigate_is_chart_local():
    session = _weather_session()
    changed = session.apply(
        Step(1, "background", "navigate", "dblclick", x=50.0, y=50.0))
    assert changed == [1]
    assert session.charts[0].transform == ViewTransform()


def test_bad_chart_index_raises():
    session = _weather_session()
    with pytest.raises(ReplayError):
        session.apply(Step(9, "background", "select", "click", x=1.0, y=1.0))


def test_overlay_rows_follow_selection():
    session = _crossfilter_session()
    # brushing the distance histogram re-aggregates the delay histogram
    state = session.charts[0]
    box = state.md.data_marks[0].bbox
    step = Step(0, "mark", "select", "click", x=box.center_x, y=box.center_y)
    session.apply(step)
    bar = session.charts[2]
    assert bar.overlay is not None
    assert bar.overlay_rows
