from __future__ import annotations

import itertools
import math

from hypothesis import given
from hypothesis import strategies as st

from chartseam.cluster import cluster_by_alignment, pair_ordered, rect_gap
from chartseam.geom import Rect
from chartseam.svgdoc import parse_svg

SVG = '<svg xmlns="http://www.w3.org/2000/svg" width="200" height="200">%s</svg>'


def _text_marks(positions):
    body = "".join('<text x="%g" y="%g" font-size="10">t</text>' % (x, y)
                   for x, y in positions)
    return parse_svg(SVG % body).marks


def test_clusters_split_at_tolerance():
    # three left-aligned, one 0.6px off: the stray lands in its own group
    marks = _text_marks([(10.0, 20), (10.3, 40), (10.49, 60), (11.1, 80)])
    clusters = cluster_by_alignment(marks, min_size=1)
    lefts = [c for c in clusters if c.kind == "left"]
    sizes = sorted(len(c.members) for c in lefts)
    assert sizes == [1, 3]


def test_min_cluster_size_filters():
    marks = _text_marks([(10, 20), (10, 40), (50, 60)])
    clusters = cluster_by_alignment(marks, min_size=3)
    assert all(len(c.members) >= 3 for c in clusters)


def test_shared_coordinate_within_tolerance():
    marks = _text_marks([(10.0, 20), (10.4, 40), (10.2, 60)])
    clusters = cluster_by_alignment(marks, min_size=3)
    left = next(c for c in clusters if c.kind == "left")
    for mark in left.members:
        assert abs(mark.bbox.left - left.position) <= 0.5


def _brute_force_pairing(small, large):
    best_pairs, best_cost = [], float("inf")
    for combo in itertools.combinations(range(len(large)), len(small)):
        cost = sum(math.hypot(small[i][0] - large[j][0], small[i][1] - large[j][1])
                   for i, j in zip(range(len(small)), combo))
        if cost < best_cost:
            best_cost = cost
            best_pairs = list(zip(range(len(small)), combo))
    return best_pairs, best_cost


@given(st.lists(st.tuples(st.floats(0, 100), st.floats(0, 100)),
                min_size=1, max_size=5),
       st.lists(st.tuples(st.floats(0, 100), st.floats(0, 100)),
                min_size=1, max_size=8))
def test_pair_ordered_matches_exhaustive_cost(a, b):
    pairs, cost = pair_ordered(a, b)
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    _, best = _brute_force_pairing(small, large)
    assert math.isclose(cost, best, rel_tol=1e-9, abs_tol=1e-9)
    assert len(pairs) == min(len(a), len(b))
    # order preserved on both sides
    a_idx = [i for i, _ in pairs]
    b_idx = [j for _, j in pairs]
    assert a_idx == sorted(a_idx) and b_idx == sorted(b_idx)
    assert len(set(a_idx)) == len(a_idx) and len(set(b_idx)) == len(b_idx)


def test_pair_ordered_skips_orphans():
    ticks = [(0.0, 0.0), (10.0, 0.0), (20.0, 0.0)]
    labels = [(0.0, 1.0), (20.0, 1.0)]
    pairs, _ = pair_ordered(labels, ticks)
    assert pairs == [(0, 0), (1, 2)]


def test_rect_gap_zero_when_overlapping():
    a = Rect(0, 0, 10, 10)
    b = Rect(5, 5, 15, 15)
    assert rect_gap(a, b) == 0.0
    c = Rect(13, 0, 20, 10)
    assert rect_gap(a, c) == 3.0
