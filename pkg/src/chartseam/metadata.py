"""Chart deconstruction pipeline: axes, legends, titles, view structure.

Every mark ends up with exactly one role.  The partition is part of the
public contract: downstream inference relies on data marks being exactly
the marks no other stage claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime

from .axes import Axis, infer_axes
from .cluster import rect_gap
from .diagnostics import Diagnostic
from .geom import Rect
from .legends import Legend, infer_legends
from .svgdoc import Mark, MarkKind, SvgDocument
from .views import ViewInfo, analyze_view, view_clip_rect

SCHEMA = "chartseam/1"
TITLE_DISTANCE_FRACTION = 0.10


@dataclass
class ChartMetadata:
    document: SvgDocument
    x_axis: Axis | None
    y_axis: Axis | None
    legends: list[Legend]
    view: ViewInfo
    title: str | None
    roles: dict[int, str] = field(default_factory=dict)

    @property
    def diagnostics(self) -> list[Diagnostic]:
        return self.document.diagnostics

    @property
    def data_marks(self) -> list[Mark]:
        return self.view.data_marks

    def axis(self, orientation: str) -> Axis | None:
        return self.x_axis if orientation == "x" else self.y_axis


def deconstruct(doc: SvgDocument) -> ChartMetadata:
    diagnostics = doc.diagnostics
    viewport = doc.viewport
    roles: dict[int, str] = {}

    x_axis, y_axis = infer_axes(doc.marks, viewport, diagnostics)
    for axis, role in ((x_axis, "axis-x"), (y_axis, "axis-y")):
        if axis:
            for mark in axis.consumed:
                roles[mark.index] = role

    remaining = [m for m in doc.marks if m.index not in roles]
    legends = infer_legends(remaining, viewport, diagnostics)
    for i, legend in enumerate(legends):
        for mark in legend.consumed:
            roles[mark.index] = "legend:%d" % i

    clip = view_clip_rect(x_axis, y_axis, viewport)
    remaining = [m for m in doc.marks if m.index not in roles]
    texts = [m for m in remaining if m.kind == MarkKind.TEXT]
    title = _assign_titles(texts, x_axis, y_axis, legends, clip, viewport, roles)

    remaining = [m for m in doc.marks if m.index not in roles]
    view = analyze_view(remaining, x_axis, y_axis, viewport, diagnostics)
    for mark in view.data_marks:
        roles[mark.index] = "data"
    for mark in view.frame_marks:
        roles[mark.index] = "frame"
    for mark in view.other_texts:
        roles[mark.index] = "text-other"

    return ChartMetadata(document=doc, x_axis=x_axis, y_axis=y_axis, legends=legends,
                         view=view, title=title, roles=roles)


def _assign_titles(texts: list[Mark], x_axis: Axis | None, y_axis: Axis | None,
                   legends: list[Legend], clip: Rect, viewport: Rect,
                   roles: dict[int, str]) -> str | None:
    threshold = TITLE_DISTANCE_FRACTION * max(viewport.width, viewport.height)
    targets: list[tuple[str, Rect]] = []
    if x_axis:
        targets.append(("title:x", x_axis.label_band()))
    if y_axis:
        targets.append(("title:y", y_axis.label_band()))
    for i, legend in enumerate(legends):
        targets.append(("legend-title:%d" % i, legend.bbox))

    claims: dict[str, list[tuple[float, Mark]]] = {}
    unassigned: list[Mark] = []
    for text in texts:
        best_name, best_gap = None, threshold
        for name, box in targets:
            gap = rect_gap(text.bbox, box)
            if gap < best_gap:
                best_name, best_gap = name, gap
        if best_name is None:
            unassigned.append(text)
        else:
            claims.setdefault(best_name, []).append((best_gap, text))

    for name, claimants in claims.items():
        claimants.sort(key=lambda item: (item[0], item[1].index))
        _, winner = claimants[0]
        roles[winner.index] = name
        text = (winner.text or "").strip()
        if name == "title:x" and x_axis:
            x_axis.title = text
        elif name == "title:y" and y_axis:
            y_axis.title = text
        elif name.startswith("legend-title:"):
            legends[int(name.split(":")[1])].title = text
        unassigned.extend(mark for _, mark in claimants[1:])

    chart_title = None
    above = [t for t in unassigned if t.bbox.bottom <= clip.top]
    if above:
        above.sort(key=lambda t: (-t.style.font_size, t.bbox.top, t.index))
        winner = above[0]
        roles[winner.index] = "title:chart"
        chart_title = (winner.text or "").strip()
    return chart_title


def _json_value(value):
    if isinstance(value, datetime):
        return value.isoformat()
    return value


def _rect_json(box: Rect) -> list[float]:
    return [box.left, box.top, box.right, box.bottom]


def metadata_to_json(meta: ChartMetadata) -> dict:
    axes = []
    for axis in (meta.x_axis, meta.y_axis):
        if axis is None:
            continue
        bins = axis.bins
        axes.append({
            "orientation": axis.orientation,
            "title": axis.title,
            "scale": axis.scale.to_json(),
            "ticks": [{"label": t.label, "position": t.position} for t in axis.ticks],
            "bins": [[_json_value(lo), _json_value(hi)] for lo, hi in bins] if bins else None,
        })
    legends = []
    for legend in meta.legends:
        entries = []
        for entry in legend.entries:
            record = {"label": entry.label, "paint": entry.paint}
            if legend.type == "size":
                record["extent"] = [entry.symbol.bbox.width, entry.symbol.bbox.height]
            if legend.type == "shape":
                record["shape"] = entry.symbol.kind.value
            entries.append(record)
        legends.append({
            "type": legend.type,
            "title": legend.title,
            "entries": entries,
            "sizeScale": legend.size_scale.to_json() if legend.size_scale else None,
            "sizeProperty": legend.size_property,
        })
    view = meta.view
    return {
        "schema": SCHEMA,
        "size": {"width": meta.document.width, "height": meta.document.height},
        "title": meta.title,
        "axes": axes,
        "legends": legends,
        "view": {
            "clip": _rect_json(view.view_clip),
            "orientation": view.orientation,
            "diverging": view.diverging,
            "baseline": view.baseline,
            "stackingGroups": [[m.index for m in group] for group in view.stacking_groups],
            "slotPositions": view.slot_positions,
        },
        "marks": [
            {"id": m.index, "kind": m.kind.value, "role": meta.roles.get(m.index, "unknown"),
             "bbox": _rect_json(m.bbox)}
            for m in meta.document.marks
        ],
        "diagnostics": [{"code": d.code, "message": d.message} for d in meta.diagnostics],
    }
