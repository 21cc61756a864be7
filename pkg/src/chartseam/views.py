"""Single-view structure: data versus frame marks, orientation, stacking.

The view clip is the intersection of the axis extents.  Remaining marks are
split into data marks and viewport furniture: backgrounds that cover the
clip, axis-parallel lines that span it (domain lines, gridlines, spines),
and anything sitting outside it.  Rect marks that share a baseline edge give
the chart its orientation; rects sharing a slot center form stacks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axes import Axis
from .cluster import ALIGNMENT_TOLERANCE
from .diagnostics import Diagnostic
from .geom import Rect
from .svgdoc import Mark, MarkKind

BACKGROUND_COVER_FRACTION = 0.90
SPAN_FRACTION = 0.90
AREA_SPAN_FRACTION = 0.80
EVEN_SPACING_RTOL = 0.02
THIN_PX = 2.0
MIN_BASELINE_SHARE = 0.3


@dataclass
class ViewInfo:
    view_clip: Rect
    data_marks: list[Mark] = field(default_factory=list)
    frame_marks: list[Mark] = field(default_factory=list)
    other_texts: list[Mark] = field(default_factory=list)
    orientation: str | None = None  # "vertical" or "horizontal"
    diverging: bool = False
    baseline: float | None = None
    stacking_groups: list[list[Mark]] = field(default_factory=list)
    slot_positions: list[float] | None = None


def _half_tick_gap(axis: Axis | None) -> float:
    if axis is None:
        return 0.0
    positions = sorted(axis.positions)
    if len(positions) < 2:
        return 0.0
    gaps = sorted(b - a for a, b in zip(positions, positions[1:]))
    return gaps[len(gaps) // 2] / 2.0


def view_clip_rect(x_axis: Axis | None, y_axis: Axis | None, viewport: Rect) -> Rect:
    if x_axis and y_axis:
        clip = x_axis.extent.intersect(y_axis.extent)
        if clip is not None:
            return clip
    if x_axis:
        return x_axis.extent
    if y_axis:
        return y_axis.extent
    return viewport


def _covers_clip(mark: Mark, clip: Rect) -> bool:
    # backgrounds are simple quads; vertex-rich polygons that blanket the
    # clip are area marks, not furniture
    if mark.kind == MarkKind.POLYGON and mark.vertices and len(mark.vertices) > 5:
        return False
    overlap = mark.bbox.intersect(clip)
    if overlap is None or clip.width <= 0 or clip.height <= 0:
        return False
    return (overlap.width * overlap.height) >= BACKGROUND_COVER_FRACTION * clip.width * clip.height


def _spans_clip(mark: Mark, clip: Rect) -> bool:
    """Axis-parallel hairline across the clip: domain line, spine, gridline."""
    if mark.kind == MarkKind.LINE and mark.vertices and len(mark.vertices) > 2:
        return False
    if mark.kind not in (MarkKind.LINE, MarkKind.RECTANGLE):
        return False
    w, h = mark.bbox.width, mark.bbox.height
    if h <= THIN_PX and w >= SPAN_FRACTION * clip.width:
        return True
    if w <= THIN_PX and h >= SPAN_FRACTION * clip.height:
        return True
    return False


def _edge_support(rects: list[Mark], low_edge, high_edge,
                  tolerance: float) -> tuple[float, int]:
    """Best-supported shared edge coordinate among rect lows and highs."""
    edges = sorted([low_edge(m) for m in rects] + [high_edge(m) for m in rects])
    best_value, best_count = 0.0, 0
    i = 0
    while i < len(edges):
        j = i
        while j < len(edges) and edges[j] - edges[i] <= tolerance:
            j += 1
        if j - i > best_count:
            best_value, best_count = edges[i], j - i
        i += 1
    return best_value, best_count


def analyze_view(marks: list[Mark], x_axis: Axis | None, y_axis: Axis | None,
                 viewport: Rect, diagnostics: list[Diagnostic]) -> ViewInfo:
    clip = view_clip_rect(x_axis, y_axis, viewport)
    view = ViewInfo(view_clip=clip)

    # marks legitimately sit a little past the extreme ticks (grouped bars,
    # edge points), so the outside test uses a widened copy of the clip
    reach = clip.expand(1.0 + max(_half_tick_gap(x_axis), _half_tick_gap(y_axis)))

    for mark in marks:
        if mark.kind == MarkKind.TEXT:
            view.other_texts.append(mark)
        elif mark.style.fill == "none" and mark.style.stroke == "none":
            view.frame_marks.append(mark)
        elif _covers_clip(mark, clip) or _spans_clip(mark, clip):
            view.frame_marks.append(mark)
        elif not reach.contains(*mark.bbox.center):
            view.frame_marks.append(mark)
        else:
            view.data_marks.append(mark)

    for mark in view.data_marks:
        if mark.kind == MarkKind.POLYGON and mark.vertices and len(mark.vertices) >= 6:
            spans_x = mark.bbox.width >= AREA_SPAN_FRACTION * clip.width
            spans_y = mark.bbox.height >= AREA_SPAN_FRACTION * clip.height
            if spans_x or spans_y:
                mark.kind = MarkKind.AREA

    _analyze_stacking(view, diagnostics)
    return view


def _analyze_stacking(view: ViewInfo, diagnostics: list[Diagnostic]) -> None:
    rects = [m for m in view.data_marks if m.kind == MarkKind.RECTANGLE]
    if len(rects) < 2:
        return
    tol = ALIGNMENT_TOLERANCE
    v_base, v_count = _edge_support(rects, lambda m: m.bbox.top, lambda m: m.bbox.bottom, tol)
    h_base, h_count = _edge_support(rects, lambda m: m.bbox.left, lambda m: m.bbox.right, tol)
    needed = max(2, int(MIN_BASELINE_SHARE * len(rects) + 0.999))
    if max(v_count, h_count) < needed:
        return

    if v_count >= h_count:
        view.orientation = "vertical"
        base = v_base
        near = lambda m: (m.bbox.top, m.bbox.bottom)
        slot = lambda m: m.bbox.center_x
    else:
        view.orientation = "horizontal"
        base = h_base
        near = lambda m: (m.bbox.left, m.bbox.right)
        slot = lambda m: m.bbox.center_y
    view.baseline = base

    grows_high = grows_low = False
    for mark in rects:
        low, high = near(mark)
        if high - low <= tol:
            continue
        if abs(low - base) <= tol:
            grows_high = True  # extends toward larger pixel coordinates
        if abs(high - base) <= tol:
            grows_low = True
    view.diverging = grows_high and grows_low

    ordered = sorted(rects, key=lambda m: (slot(m), m.index))
    groups: list[list[Mark]] = []
    for mark in ordered:
        if groups and abs(slot(mark) - slot(groups[-1][0])) <= tol:
            groups[-1].append(mark)
        else:
            groups.append([mark])
    for group in groups:
        group.sort(key=lambda m: (min(abs(near(m)[0] - base), abs(near(m)[1] - base)), m.index))
    view.stacking_groups = groups

    centers = [slot(g[0]) for g in groups]
    if len(centers) >= 3:
        deltas = [centers[i + 1] - centers[i] for i in range(len(centers) - 1)]
        mean = sum(deltas) / len(deltas)
        if mean > 0 and all(abs(d - mean) <= EVEN_SPACING_RTOL * mean for d in deltas):
            view.slot_positions = centers
        else:
            diagnostics.append(Diagnostic(
                "uneven-slots", "bar slot centers are not evenly spaced",
                {"centers": centers}))
    elif centers:
        view.slot_positions = centers
