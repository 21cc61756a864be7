"""Axis inference: pair a row or column of tick labels with its tick marks.

Tick-mark candidates are thin line or rect marks that align into a row
(x axis) or column (y axis) and share one drawing style.  Each candidate
mark group is paired element-wise against a text group; candidates whose
groups sit more than 10% of the larger viewport dimension apart are pruned.
The best-scoring pair per orientation wins: most matched ticks first, then
smallest mean label-to-tick distance.  At most one x and one y axis result.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cluster import (COLUMN_KINDS, MIN_AXIS_CLUSTER, ROW_KINDS, AlignmentCluster,
                      cluster_by_alignment, pair_ordered, rect_gap)
from .diagnostics import Diagnostic
from .geom import Rect
from .scales import IdentityScale, Scale, infer_scale, parse_tick_label
from .svgdoc import Mark, MarkKind

TICK_THINNESS = 2.0
DISTANCE_FRACTION = 0.10


@dataclass
class Tick:
    label: str
    position: float
    value_kind: str
    value: object
    text_mark: Mark
    tick_mark: Mark


@dataclass
class Axis:
    orientation: str  # "x" or "y"
    ticks: list[Tick]
    scale: Scale
    extent: Rect
    consumed: list[Mark] = field(default_factory=list)
    title: str | None = None

    @property
    def tick_labels(self) -> list[str]:
        return [tick.label for tick in self.ticks]

    @property
    def positions(self) -> list[float]:
        return [tick.position for tick in self.ticks]

    @property
    def bins(self) -> list[tuple[object, object]] | None:
        """Value ranges between sequential tick pairs, for binned axes."""
        if self.scale.kind not in ("linear", "log", "date") or len(self.ticks) < 2:
            return None
        values = [tick.value for tick in self.ticks]
        return [(values[i], values[i + 1]) for i in range(len(values) - 1)]

    def label_band(self) -> Rect:
        box = self.ticks[0].text_mark.bbox
        for tick in self.ticks[1:]:
            box = box.union(tick.text_mark.bbox)
        return box


def _tick_like(mark: Mark) -> bool:
    if mark.kind not in (MarkKind.LINE, MarkKind.RECTANGLE):
        return False
    w, h = mark.bbox.width, mark.bbox.height
    return min(w, h) <= max(TICK_THINNESS, 0.15 * max(w, h))


def _style_group_key(mark: Mark) -> tuple:
    return (mark.kind.value, mark.style.paint_key(),
            round(mark.bbox.width, 1), round(mark.bbox.height, 1))


def _split_by_style(cluster: AlignmentCluster) -> list[AlignmentCluster]:
    groups: dict[tuple, list[Mark]] = {}
    for mark in cluster.members:
        groups.setdefault(_style_group_key(mark), []).append(mark)
    out = []
    for key in sorted(groups, key=repr):
        members = groups[key]
        if len(members) >= MIN_AXIS_CLUSTER:
            out.append(AlignmentCluster(cluster.kind, cluster.position, members))
    return out


@dataclass
class _Candidate:
    orientation: str
    texts: AlignmentCluster
    marks: AlignmentCluster
    pairs: list[tuple[int, int]]
    mean_distance: float

    def sort_key(self) -> tuple:
        return (-len(self.pairs), self.mean_distance, self.orientation,
                self.marks.position, tuple(sorted(self.marks.member_ids())))


def _candidates_for(orientation: str, text_clusters, mark_clusters,
                    threshold: float, diagnostics: list[Diagnostic]) -> list[_Candidate]:
    along = 0 if orientation == "x" else 1
    out: list[_Candidate] = []
    for texts in text_clusters:
        t_sorted = AlignmentCluster(texts.kind, texts.position,
                                    sorted(texts.members, key=lambda m: m.bbox.center[along]))
        for marks in mark_clusters:
            gap = rect_gap(texts.bbox, marks.bbox)
            if gap > threshold:
                diagnostics.append(Diagnostic(
                    "axis-candidate-pruned",
                    "%s-axis candidate rejected: groups %.1fpx apart (limit %.1f)"
                    % (orientation, gap, threshold)))
                continue
            m_sorted = AlignmentCluster(marks.kind, marks.position,
                                        sorted(marks.members, key=lambda m: m.bbox.center[along]))
            pairs, total = pair_ordered(
                [m.bbox.center for m in t_sorted.members],
                [m.bbox.center for m in m_sorted.members])
            if len(pairs) < MIN_AXIS_CLUSTER:
                continue
            out.append(_Candidate(orientation, t_sorted, m_sorted,
                                  pairs, total / len(pairs)))
    return out


def _dedup_clusters(clusters: list[AlignmentCluster]) -> list[AlignmentCluster]:
    seen: set[frozenset[int]] = set()
    out = []
    for cluster in clusters:
        ids = cluster.member_ids()
        if ids in seen:
            continue
        seen.add(ids)
        out.append(cluster)
    return out


def _build_axis(candidate: _Candidate, viewport: Rect,
                diagnostics: list[Diagnostic]) -> Axis:
    along = 0 if candidate.orientation == "x" else 1
    ticks = []
    for ti, mi in candidate.pairs:
        text = candidate.texts.members[ti]
        tick_mark = candidate.marks.members[mi]
        kind, value = parse_tick_label(text.text or "")
        ticks.append(Tick(label=(text.text or "").strip(),
                          position=tick_mark.bbox.center[along],
                          value_kind=kind, value=value,
                          text_mark=text, tick_mark=tick_mark))
    ticks.sort(key=lambda tk: tk.position)
    scale = infer_scale([tk.label for tk in ticks], [tk.position for tk in ticks],
                        diagnostics)
    positions = [tk.position for tk in ticks]
    if candidate.orientation == "x":
        extent = Rect(min(positions), 0.0, max(positions), viewport.bottom)
    else:
        extent = Rect(0.0, min(positions), viewport.right, max(positions))
    consumed = list(candidate.marks.members)
    consumed.extend(tk.text_mark for tk in ticks)
    return Axis(candidate.orientation, ticks, scale, extent, consumed)


def infer_axes(marks: list[Mark], viewport: Rect,
               diagnostics: list[Diagnostic]) -> tuple[Axis | None, Axis | None]:
    """Find at most one x and one y axis among the document's marks."""
    texts = [m for m in marks if m.kind == MarkKind.TEXT]
    tick_candidates = [m for m in marks if m.kind != MarkKind.TEXT and _tick_like(m)]
    threshold = DISTANCE_FRACTION * max(viewport.width, viewport.height)

    text_rows = _dedup_clusters([c for c in cluster_by_alignment(
        texts, kinds=ROW_KINDS, min_size=MIN_AXIS_CLUSTER)])
    text_cols = _dedup_clusters([c for c in cluster_by_alignment(
        texts, kinds=COLUMN_KINDS, min_size=MIN_AXIS_CLUSTER)])

    mark_rows: list[AlignmentCluster] = []
    for cluster in cluster_by_alignment(tick_candidates, kinds=ROW_KINDS,
                                        min_size=MIN_AXIS_CLUSTER):
        mark_rows.extend(c for c in _split_by_style(cluster)
                         if all(m.bbox.height >= m.bbox.width for m in c.members))
    mark_cols: list[AlignmentCluster] = []
    for cluster in cluster_by_alignment(tick_candidates, kinds=COLUMN_KINDS,
                                        min_size=MIN_AXIS_CLUSTER):
        mark_cols.extend(c for c in _split_by_style(cluster)
                         if all(m.bbox.width >= m.bbox.height for m in c.members))
    mark_rows = _dedup_clusters(mark_rows)
    mark_cols = _dedup_clusters(mark_cols)

    x_candidates = _candidates_for("x", text_rows, mark_rows, threshold, diagnostics)
    y_candidates = _candidates_for("y", text_cols, mark_cols, threshold, diagnostics)

    x_axis = y_axis = None
    if x_candidates:
        best_x = min(x_candidates, key=_Candidate.sort_key)
        x_axis = _build_axis(best_x, viewport, diagnostics)
    if y_candidates:
        taken = {m.index for m in (x_axis.consumed if x_axis else [])}
        y_viable = [c for c in y_candidates
                    if not (c.texts.member_ids() | c.marks.member_ids()) & taken]
        if y_viable:
            best_y = min(y_viable, key=_Candidate.sort_key)
            y_axis = _build_axis(best_y, viewport, diagnostics)
    return x_axis, y_axis
