"""Alignment clustering and order-preserving pairing of chart furniture.

Charts align their furniture: tick labels share a row, legend swatches share
a column.  Clustering marks on shared edge or center coordinates recovers
those groups; pairing then matches a text group against a mark group
one-to-one, tolerating orphans such as unlabeled ticks or gridlines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import Rect
from .svgdoc import Mark

ALIGNMENT_TOLERANCE = 0.5
MIN_AXIS_CLUSTER = 3
MIN_LEGEND_CLUSTER = 2

ALIGNMENT_KINDS = ("left", "right", "top", "bottom", "centerX", "centerY")

# Alignment kinds that make a horizontal row (shared y) or vertical column.
ROW_KINDS = ("top", "bottom", "centerY")
COLUMN_KINDS = ("left", "right", "centerX")


def _coordinate(mark: Mark, kind: str) -> float:
    box = mark.bbox
    return {
        "left": box.left, "right": box.right, "top": box.top, "bottom": box.bottom,
        "centerX": box.center_x, "centerY": box.center_y,
    }[kind]


@dataclass
class AlignmentCluster:
    kind: str
    position: float
    members: list[Mark]

    @property
    def bbox(self) -> Rect:
        box = self.members[0].bbox
        for mark in self.members[1:]:
            box = box.union(mark.bbox)
        return box

    def member_ids(self) -> frozenset[int]:
        return frozenset(mark.index for mark in self.members)


def cluster_by_alignment(marks: list[Mark], kinds=ALIGNMENT_KINDS,
                         tolerance: float = ALIGNMENT_TOLERANCE,
                         min_size: int = 2) -> list[AlignmentCluster]:
    """Group marks whose `kind` coordinate agrees within `tolerance`.

    A mark may appear in one cluster per alignment kind.  Groups are anchored
    at their first (smallest) coordinate, so a cluster never spreads wider
    than the tolerance.
    """
    clusters: list[AlignmentCluster] = []
    for kind in kinds:
        ordered = sorted(marks, key=lambda mk: (_coordinate(mk, kind), mk.index))
        group: list[Mark] = []
        anchor = 0.0
        for mark in ordered:
            coord = _coordinate(mark, kind)
            if not group:
                group, anchor = [mark], coord
            elif coord - anchor <= tolerance:
                group.append(mark)
            else:
                if len(group) >= min_size:
                    clusters.append(_finish(kind, group))
                group, anchor = [mark], coord
        if len(group) >= min_size:
            clusters.append(_finish(kind, group))
    return clusters


def _finish(kind: str, group: list[Mark]) -> AlignmentCluster:
    position = sum(_coordinate(mark, kind) for mark in group) / len(group)
    return AlignmentCluster(kind, position, list(group))


def rect_gap(a: Rect, b: Rect) -> float:
    """Euclidean gap between two rects; zero when they touch or overlap."""
    dx = max(0.0, max(a.left, b.left) - min(a.right, b.right))
    dy = max(0.0, max(a.top, b.top) - min(a.bottom, b.bottom))
    return math.hypot(dx, dy)


def pair_ordered(a_points: list[tuple[float, float]],
                 b_points: list[tuple[float, float]]) -> tuple[list[tuple[int, int]], float]:
    """Match two coordinate sequences one-to-one, preserving order.

    Every element of the smaller sequence is matched to a distinct element
    of the larger one; surplus elements of the larger sequence (orphan ticks,
    gridlines) are skipped.  Among all such matchings the one minimizing the
    summed point distances is returned as (index pairs, total cost).
    """
    swap = len(a_points) > len(b_points)
    small, large = (b_points, a_points) if swap else (a_points, b_points)
    n, m = len(small), len(large)
    if n == 0:
        return [], 0.0

    inf = float("inf")
    cost = [[inf] * (m + 1) for _ in range(n + 1)]
    cost[0] = [0.0] * (m + 1)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            skip = cost[i][j - 1]
            px, py = small[i - 1]
            qx, qy = large[j - 1]
            match = cost[i - 1][j - 1] + math.hypot(px - qx, py - qy)
            cost[i][j] = match if match < skip else skip

    pairs: list[tuple[int, int]] = []
    i, j = n, m
    while i > 0 and j > 0:
        px, py = small[i - 1]
        qx, qy = large[j - 1]
        if cost[i][j] == cost[i - 1][j - 1] + math.hypot(px - qx, py - qy):
            pairs.append((i - 1, j - 1))
            i, j = i - 1, j - 1
        else:
            j -= 1
    pairs.reverse()
    if swap:
        pairs = [(jq, ip) for ip, jq in pairs]
    return pairs, cost[n][m]
