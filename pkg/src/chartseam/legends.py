"""Legend inference: aligned symbol runs paired with label runs.

A legend's symbols align like ticks do, but unlike ticks they vary in at
least one style field: fill for color legends, extent for size legends,
outline shape for shape legends.  Candidate symbol groups pair with text
groups under the same 10%-of-viewport distance limit used for axes, and
accepted legends consume their marks so later stages never see them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cluster import (COLUMN_KINDS, MIN_LEGEND_CLUSTER, ROW_KINDS, AlignmentCluster,
                      cluster_by_alignment, pair_ordered, rect_gap)
from .diagnostics import Diagnostic
from .errors import ScaleError
from .geom import Rect
from .scales import LinearScale, Scale, parse_tick_label
from .svgdoc import Mark, MarkKind

SYMBOL_MAX_FRACTION = 0.05
DISTANCE_FRACTION = 0.10
SIZE_SPREAD_PX = 1.0
SIZE_FIT_RTOL = 0.05


def mark_paint(mark: Mark) -> str:
    """The color that visually identifies a mark: fill, else stroke."""
    if mark.style.fill != "none":
        return mark.style.fill
    return mark.style.stroke


def mark_area(mark: Mark) -> float:
    if mark.kind == MarkKind.ELLIPSE and mark.radii:
        return math.pi * mark.radii[0] * mark.radii[1]
    return mark.bbox.width * mark.bbox.height


@dataclass
class LegendEntry:
    label: str
    symbol: Mark
    text_mark: Mark

    @property
    def paint(self) -> str:
        return mark_paint(self.symbol)


@dataclass
class Legend:
    type: str  # "color", "size" or "shape"
    entries: list[LegendEntry]
    title: str | None = None
    size_scale: Scale | None = None
    size_property: str | None = None
    consumed: list[Mark] = field(default_factory=list)

    @property
    def labels(self) -> list[str]:
        return [entry.label for entry in self.entries]

    @property
    def bbox(self) -> Rect:
        box = self.entries[0].symbol.bbox
        for entry in self.entries:
            box = box.union(entry.symbol.bbox).union(entry.text_mark.bbox)
        return box

    def entry_for_paint(self, paint: str) -> LegendEntry | None:
        for entry in self.entries:
            if entry.paint == paint:
                return entry
        return None


def _style_varies(members: list[Mark]) -> bool:
    fills = {m.style.fill for m in members}
    strokes = {m.style.stroke for m in members}
    kinds = {m.kind for m in members}
    sizes = [max(m.bbox.width, m.bbox.height) for m in members]
    return (len(fills) > 1 or len(strokes) > 1 or len(kinds) > 1
            or max(sizes) - min(sizes) > SIZE_SPREAD_PX)


def _legend_type(members: list[Mark]) -> str:
    if len({mark_paint(m) for m in members}) > 1:
        return "color"
    sizes = [max(m.bbox.width, m.bbox.height) for m in members]
    if max(sizes) - min(sizes) > SIZE_SPREAD_PX:
        return "size"
    return "shape"


@dataclass
class _Candidate:
    orientation: str  # "row" or "column"
    texts: AlignmentCluster
    symbols: AlignmentCluster
    pairs: list[tuple[int, int]]
    mean_distance: float

    def sort_key(self) -> tuple:
        return (-len(self.pairs), self.mean_distance, self.orientation,
                self.symbols.position, tuple(sorted(self.symbols.member_ids())))


def _fit_size_scale(entries: list[LegendEntry], diagnostics: list[Diagnostic]):
    values = []
    for entry in entries:
        kind, value = parse_tick_label(entry.label)
        if kind != "number":
            return None, None
        values.append(value)
    metrics = (
        ("area", [mark_area(e.symbol) for e in entries]),
        ("width", [e.symbol.bbox.width for e in entries]),
        ("height", [e.symbol.bbox.height for e in entries]),
    )
    order = sorted(range(len(values)), key=lambda i: values[i])
    for name, metric in metrics:
        v0, v1 = values[order[0]], values[order[-1]]
        m0, m1 = metric[order[0]], metric[order[-1]]
        if v0 == v1 or m0 == m1:
            continue
        span = abs(m1 - m0)
        worst = max(abs(m0 + (values[i] - v0) / (v1 - v0) * (m1 - m0) - metric[i])
                    for i in order)
        if worst <= SIZE_FIT_RTOL * span:
            try:
                return LinearScale((v0, v1), (m0, m1)), name
            except ScaleError:
                continue
    diagnostics.append(Diagnostic(
        "size-legend-unfit", "no linear fit on area, width or height for size legend"))
    return None, None


def infer_legends(marks: list[Mark], viewport: Rect,
                  diagnostics: list[Diagnostic]) -> list[Legend]:
    texts = [m for m in marks if m.kind == MarkKind.TEXT]
    limit = SYMBOL_MAX_FRACTION * max(viewport.width, viewport.height)
    symbols = [m for m in marks if m.kind != MarkKind.TEXT
               and max(m.bbox.width, m.bbox.height) <= limit]
    threshold = DISTANCE_FRACTION * max(viewport.width, viewport.height)

    candidates: list[_Candidate] = []
    for orientation, kinds in (("row", ROW_KINDS), ("column", COLUMN_KINDS)):
        along = 0 if orientation == "row" else 1
        symbol_clusters = [c for c in cluster_by_alignment(
            symbols, kinds=kinds, min_size=MIN_LEGEND_CLUSTER) if _style_varies(c.members)]
        text_clusters = cluster_by_alignment(texts, kinds=kinds, min_size=MIN_LEGEND_CLUSTER)
        seen: set[tuple] = set()
        for sym_cluster in symbol_clusters:
            for text_cluster in text_clusters:
                key = (sym_cluster.member_ids(), text_cluster.member_ids())
                if key in seen:
                    continue
                seen.add(key)
                gap = rect_gap(sym_cluster.bbox, text_cluster.bbox)
                if gap > threshold:
                    diagnostics.append(Diagnostic(
                        "legend-candidate-pruned",
                        "legend candidate rejected: groups %.1fpx apart (limit %.1f)"
                        % (gap, threshold)))
                    continue
                sym_sorted = AlignmentCluster(
                    sym_cluster.kind, sym_cluster.position,
                    sorted(sym_cluster.members, key=lambda m: m.bbox.center[along]))
                text_sorted = AlignmentCluster(
                    text_cluster.kind, text_cluster.position,
                    sorted(text_cluster.members, key=lambda m: m.bbox.center[along]))
                pairs, total = pair_ordered(
                    [m.bbox.center for m in text_sorted.members],
                    [m.bbox.center for m in sym_sorted.members])
                if len(pairs) < MIN_LEGEND_CLUSTER:
                    continue
                candidates.append(_Candidate(orientation, text_sorted, sym_sorted,
                                             pairs, total / len(pairs)))

    legends: list[Legend] = []
    used: set[int] = set()
    for candidate in sorted(candidates, key=_Candidate.sort_key):
        involved = candidate.texts.member_ids() | candidate.symbols.member_ids()
        if involved & used:
            continue
        entries = []
        for ti, si in candidate.pairs:
            text = candidate.texts.members[ti]
            symbol = candidate.symbols.members[si]
            entries.append(LegendEntry(label=(text.text or "").strip(),
                                       symbol=symbol, text_mark=text))
        along = 0 if candidate.orientation == "row" else 1
        entries.sort(key=lambda e: e.symbol.bbox.center[along])
        legend = Legend(type=_legend_type([e.symbol for e in entries]), entries=entries)
        legend.consumed = [e.symbol for e in entries] + [e.text_mark for e in entries]
        if legend.type == "size":
            legend.size_scale, legend.size_property = _fit_size_scale(entries, diagnostics)
        used |= {m.index for m in legend.consumed}
        legends.append(legend)
    return legends
