from __future__ import annotations

import math

from hypothesis import given
from hypothesis import strategies as st

from chartseam.geom import Rect, TransformMatrix, parse_transform

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
nonzero = finite.filter(lambda v: abs(v) > 1e-3)


def matrices():
    return st.builds(TransformMatrix, nonzero, finite, finite, nonzero, finite, finite)


def test_identity_applies_nothing():
    m = TransformMatrix.identity()
    assert m.apply(3.0, 4.0) == (3.0, 4.0)
    assert m.is_identity


def test_translate_then_scale_order():
    # (scale @ translate) applies the translation first
    m = TransformMatrix.scale(2.0) @ TransformMatrix.translate(1.0, 1.0)
    assert m.apply(0.0, 0.0) == (2.0, 2.0)
    m = TransformMatrix.translate(1.0, 1.0) @ TransformMatrix.scale(2.0)
    assert m.apply(0.0, 0.0) == (1.0, 1.0)


def test_rotate_about_center():
    m = TransformMatrix.rotate(90.0, 10.0, 10.0)
    x, y = m.apply(10.0, 0.0)
    assert math.isclose(x, 20.0, abs_tol=1e-9)
    assert math.isclose(y, 10.0, abs_tol=1e-9)


@given(matrices(), finite, finite)
def test_inverse_round_trips(m, x, y):
    det = m.a * m.d - m.b * m.c
    if abs(det) < 1e-6:
        return
    px, py = m.apply(x, y)
    rx, ry = m.inverse().apply(px, py)
    scale = max(abs(x), abs(y), 1.0)
    assert abs(rx - x) <= 1e-6 * scale
    assert abs(ry - y) <= 1e-6 * scale


@given(matrices(), matrices(), finite, finite)
def test_composition_is_function_composition(m1, m2, x, y):
    lhs = (m1 @ m2).apply(x, y)
    inner = m2.apply(x, y)
    rhs = m1.apply(*inner)
    for a, b in zip(lhs, rhs):
        assert abs(a - b) <= 1e-6 * max(abs(a), abs(b), 1.0)


def test_parse_transform_forms():
    m = parse_transform("translate(50,10)")
    assert m.apply(0.0, 0.0) == (50.0, 10.0)
    m = parse_transform("matrix(2 0 0 2 5 5)")
    assert m.apply(1.0, 1.0) == (7.0, 7.0)
    m = parse_transform("translate(10) scale(2)")
    assert m.apply(1.0, 0.0) == (12.0, 0.0)
    assert parse_transform(None).is_identity
    assert parse_transform("").is_identity


def test_parse_transform_rotate_with_center():
    direct = parse_transform("rotate(90 5 5)")
    composed = TransformMatrix.rotate(90.0, 5.0, 5.0)
    for px, py in [(0.0, 0.0), (5.0, 5.0), (10.0, 0.0)]:
        ax, ay = direct.apply(px, py)
        bx, by = composed.apply(px, py)
        assert math.isclose(ax, bx, abs_tol=1e-9)
        assert math.isclose(ay, by, abs_tol=1e-9)


def test_rect_basics():
    r = Rect(1.0, 2.0, 4.0, 6.0)
    assert r.width == 3.0 and r.height == 4.0
    assert r.center == (2.5, 4.0)
    assert r.contains(1.0, 2.0)
    assert not r.contains(0.9, 2.0)
    assert r.contains(0.9, 2.0, pad=0.2)


def test_rect_union_intersect():
    a = Rect(0.0, 0.0, 2.0, 2.0)
    b = Rect(1.0, 1.0, 3.0, 3.0)
    assert a.union(b) == Rect(0.0, 0.0, 3.0, 3.0)
    assert a.intersect(b) == Rect(1.0, 1.0, 2.0, 2.0)
    assert a.intersect(Rect(5.0, 5.0, 6.0, 6.0)) is None


@given(st.lists(st.tuples(finite, finite), min_size=1, max_size=10))
def test_rect_from_points_bounds_all(points):
    r = Rect.from_points(points)
    for x, y in points:
        assert r.left <= x <= r.right
        assert r.top <= y <= r.bottom


def test_rect_transformed_axis_aligned():
    r = Rect(0.0, 0.0, 10.0, 10.0)
    m = TransformMatrix.scale(2.0) @ TransformMatrix.translate(1.0, 0.0)
    assert r.transformed(m) == Rect(2.0, 0.0, 22.0, 20.0)
