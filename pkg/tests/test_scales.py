from __future__ import annotations

import math
from datetime import datetime

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chartseam.errors import ScaleError
from chartseam.scales import (CategoricalScale, DateScale, LinearScale,
                              LogScale, infer_scale, parse_tick_label)


def test_parse_tick_label_numbers():
    assert parse_tick_label("42") == ("number", 42.0)
    assert parse_tick_label("-3.5") == ("number", -3.5)
    assert parse_tick_label("1,200") == ("number", 1200.0)
    assert parse_tick_label("1e4") == ("number", 10000.0)
    assert parse_tick_label("85%") == ("number", 85.0)


def test_parse_tick_label_dates():
    kind, value = parse_tick_label("2012-01-06")
    assert kind == "date" and value == datetime(2012, 1, 6)
    kind, value = parse_tick_label("Jan 05")
    assert kind == "date" and (value.month, value.day) == (1, 5)


def test_parse_tick_label_bare_words_are_text():
    # month names without digits stay categorical
    assert parse_tick_label("jan") == ("text", "jan")
    assert parse_tick_label("drizzle") == ("text", "drizzle")


def test_linear_round_trip():
    scale = LinearScale((0.0, 100.0), (420.0, 60.0))
    for value in (0.0, 25.0, 99.0):
        assert math.isclose(scale.invert(scale.apply(value)), value, abs_tol=1e-9)


@given(st.floats(min_value=-1e5, max_value=1e5))
def test_linear_inversion_property(value):
    scale = LinearScale((-1e5, 1e5), (0.0, 500.0))
    assert math.isclose(scale.invert(scale.apply(value)), value,
                        rel_tol=1e-9, abs_tol=1e-6)


def test_log_round_trip():
    scale = LogScale((1.0, 10000.0), (80.0, 600.0))
    for value in (1.0, 10.0, 123.0, 10000.0):
        assert math.isclose(scale.invert(scale.apply(value)), value, rel_tol=1e-9)


def test_log_rejects_nonpositive():
    scale = LogScale((1.0, 100.0), (0.0, 100.0))
    with pytest.raises(ScaleError):
        scale.apply(0.0)


def test_date_scale_round_trip():
    scale = DateScale((datetime(2012, 1, 1), datetime(2012, 2, 1)), (80.0, 600.0))
    mid = scale.apply(datetime(2012, 1, 16))
    assert scale.invert(mid) == datetime(2012, 1, 16)


def test_categorical_maps_labels_to_slots():
    scale = CategoricalScale(["a", "b", "c"], [10.0, 20.0, 30.0])
    assert scale.apply("b") == 20.0
    assert scale.invert(21.0) == "b"
    assert scale.invert(26.0) == "c"


def _infer(labels, positions):
    return infer_scale(labels, positions)


def test_infer_scale_linear_from_ticks():
    scale = _infer(["0", "20", "40", "60"], [420.0, 360.0, 300.0, 240.0])
    assert isinstance(scale, LinearScale)
    assert math.isclose(scale.apply(0.0), 420.0, abs_tol=1e-6)
    assert math.isclose(scale.apply(60.0), 240.0, abs_tol=1e-6)


def test_infer_scale_log_from_ticks():
    scale = _infer(["1", "10", "100", "1000"], [80.0, 210.0, 340.0, 470.0])
    assert isinstance(scale, LogScale)
    assert math.isclose(scale.apply(100.0), 340.0, abs_tol=1e-3)


def test_infer_scale_dates():
    labels = ["2012-01-01", "2012-01-11", "2012-01-21", "2012-01-31"]
    scale = _infer(labels, [100.0, 200.0, 300.0, 400.0])
    assert isinstance(scale, DateScale)
    assert math.isclose(scale.apply(datetime(2012, 1, 21)), 300.0, abs_tol=1e-6)


def test_infer_scale_categorical_fallback():
    scale = _infer(["dog", "cat", "bird"], [10.0, 20.0, 30.0])
    assert isinstance(scale, CategoricalScale)


def test_infer_scale_nonuniform_numbers_degrade_to_linear_with_diagnostic():
    # numeric ticks fitting neither spacing keep a linear reading but the
    # mismatch is reported
    diagnostics = []
    scale = infer_scale(["1", "2", "10"], [10.0, 20.0, 30.0], diagnostics)
    assert isinstance(scale, LinearScale)
    assert any(d.code == "nonlinear-ticks" for d in diagnostics)
