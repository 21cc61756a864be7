"""Reconstruct the backing data table of a deconstructed chart.

Every data mark is read back through the inverted axis scales: rects become
bar rows (category or bin, signed length along the value axis), symbols
become point rows, polylines contribute a row per vertex, and area polygons
a row per distinct x position (upper boundary minus lower boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta

from .axes import Axis
from .legends import Legend, mark_area, mark_paint
from .metadata import ChartMetadata
from .query import bin_label
from .scales import CategoricalScale, DateScale, to_epoch_ms
from .svgdoc import Mark, MarkKind
from .table import DataTable, Field, FieldType

VERTEX_X_TOLERANCE = 0.5
BIN_WIDTH_RTOL = 0.25
DAY_MS = 86400000.0


@dataclass
class InferredTable:
    table: DataTable
    row_marks: list[list[int]] = field(default_factory=list)
    mark_rows: dict[int, list[int]] = field(default_factory=dict)
    roles: dict[str, str] = field(default_factory=dict)  # field name -> x/y/color/size

    def field_for_role(self, role: str) -> str | None:
        for name, r in self.roles.items():
            if r == role:
                return name
        return None


def _axis_field_name(axis: Axis | None, fallback: str) -> str:
    if axis and axis.title:
        return axis.title
    return fallback


def _legend_field_name(legend: Legend, fallback: str) -> str:
    return legend.title or fallback


def _scale_field_type(axis: Axis | None) -> FieldType:
    if axis is None:
        return FieldType.NUMBER
    scale = axis.scale
    if isinstance(scale, CategoricalScale):
        return FieldType.TEXT
    if isinstance(scale, DateScale):
        return FieldType.DATE
    return FieldType.NUMBER


def _snaps_to_days(axis: Axis | None) -> bool:
    """Snap inverted dates to midnight when ticks are at least two days apart."""
    if axis is None or not isinstance(axis.scale, DateScale):
        return False
    values = [tick.value for tick in axis.ticks if isinstance(tick.value, datetime)]
    if len(values) < 2:
        return False
    ms = sorted(to_epoch_ms(v) for v in values)
    spacing = min(b - a for a, b in zip(ms, ms[1:]) if b > a)
    return spacing >= 2 * DAY_MS


def _snap_date(value: datetime) -> datetime:
    base = datetime(value.year, value.month, value.day)
    seconds = (value - base).total_seconds()
    if seconds >= 43200:
        base += timedelta(days=1)
    return base


def _invert(axis: Axis | None, position: float, snap: bool):
    if axis is None:
        return position
    value = axis.scale.invert(position)
    if snap and isinstance(value, datetime):
        value = _snap_date(value)
    return value


def _bin_for_bar(axis: Axis, mark: Mark) -> str | None:
    """Match a bar's extent to a pair of consecutive ticks and label the bin."""
    bins = axis.bins
    if not bins or isinstance(axis.scale, (CategoricalScale, DateScale)):
        return None
    positions = axis.positions
    if axis.orientation == "x":
        lo_px, hi_px = mark.bbox.left, mark.bbox.right
    else:
        lo_px, hi_px = mark.bbox.top, mark.bbox.bottom
    top_value = max(max(pair) for pair in bins)
    best = None
    for k, (va, vb) in enumerate(bins):
        a, b = positions[k], positions[k + 1]
        if a > b:
            a, b = b, a
        width = b - a
        if width <= 0:
            continue
        misfit = abs(lo_px - a) + abs(hi_px - b)
        if misfit <= BIN_WIDTH_RTOL * width and (best is None or misfit < best[0]):
            lo, hi = min(va, vb), max(va, vb)
            best = (misfit, bin_label(lo, hi, closed=hi == top_value))
    return best[1] if best else None


def _color_label(legend: Legend | None, mark: Mark) -> str | None:
    if legend is None:
        return None
    entry = legend.entry_for_paint(mark_paint(mark))
    return entry.label if entry else None


def _size_value(legend: Legend | None, mark: Mark) -> float | None:
    if legend is None or legend.size_scale is None:
        return None
    if legend.size_property == "area":
        measure = mark_area(mark)
    elif legend.size_property == "width":
        measure = mark.bbox.width
    else:
        measure = mark.bbox.height
    return legend.size_scale.invert(measure)


def _bar_rows(mark: Mark, md: ChartMetadata, snap_x: bool, snap_y: bool):
    vertical = (md.view.orientation or "vertical") == "vertical"
    cat_axis = md.x_axis if vertical else md.y_axis
    val_axis = md.y_axis if vertical else md.x_axis
    if vertical:
        near_lo, near_hi = mark.bbox.top, mark.bbox.bottom
        cat_pos = mark.bbox.center_x
    else:
        near_lo, near_hi = mark.bbox.left, mark.bbox.right
        cat_pos = mark.bbox.center_y
    baseline = md.view.baseline
    if baseline is None:
        baseline = near_hi if vertical else near_lo
    if abs(near_lo - baseline) <= abs(near_hi - baseline):
        near, far = near_lo, near_hi
    else:
        near, far = near_hi, near_lo
    if val_axis is not None:
        value = val_axis.scale.invert(far) - val_axis.scale.invert(near)
    else:
        value = far - near
    category = None
    if cat_axis is not None:
        category = _bin_for_bar(cat_axis, mark)
        if category is None:
            snap = snap_x if vertical else snap_y
            category = _invert(cat_axis, cat_pos, snap)
    else:
        category = cat_pos
    return category, value


def _area_rows(mark: Mark, md: ChartMetadata, snap_x: bool):
    """One row per distinct x: upper boundary minus lower boundary."""
    vertices = list(mark.vertices or [])
    if len(vertices) >= 2 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    groups: list[tuple[float, list[float]]] = []
    for x, y in sorted(vertices):
        if groups and abs(x - groups[-1][0]) <= VERTEX_X_TOLERANCE:
            groups[-1][1].append(y)
        else:
            groups.append((x, [y]))
    rows = []
    bottom = mark.bbox.bottom
    for x, ys in groups:
        top_y = min(ys)
        bot_y = max(ys) if len(ys) > 1 else bottom
        x_val = _invert(md.x_axis, x, snap_x)
        if md.y_axis is not None:
            value = md.y_axis.scale.invert(top_y) - md.y_axis.scale.invert(bot_y)
        else:
            value = bot_y - top_y
        rows.append((x_val, value))
    return rows


def infer_table(md: ChartMetadata, name: str | None = None) -> InferredTable:
    """Build the data table backing a deconstructed chart."""
    color_legend = next((lg for lg in md.legends if lg.type in ("color", "shape")), None)
    size_legend = next((lg for lg in md.legends if lg.type == "size"), None)
    snap_x = _snaps_to_days(md.x_axis)
    snap_y = _snaps_to_days(md.y_axis)

    marks = sorted(md.data_marks, key=lambda m: m.index)
    kinds = {m.kind for m in marks}
    bar_like = MarkKind.RECTANGLE in kinds and md.view.baseline is not None

    x_name = _axis_field_name(md.x_axis, "x")
    y_name = _axis_field_name(md.y_axis, "y")
    color_name = _legend_field_name(color_legend, "color") if color_legend else None
    size_name = _legend_field_name(size_legend, "size") if size_legend else None

    fields: list[Field] = []
    roles: dict[str, str] = {}

    def add_field(name: str, ftype: FieldType, role: str) -> None:
        fields.append(Field(name, ftype))
        roles[name] = role

    vertical = (md.view.orientation or "vertical") == "vertical"
    histogram = False
    if bar_like:
        cat_axis = md.x_axis if vertical else md.y_axis
        histogram = bool(
            cat_axis is not None and cat_axis.bins
            and not isinstance(cat_axis.scale, (CategoricalScale, DateScale))
            and any(_bin_for_bar(cat_axis, m) is not None
                    for m in marks if m.kind == MarkKind.RECTANGLE))
        cat_type = FieldType.TEXT if histogram else _scale_field_type(cat_axis)
        if vertical:
            add_field(x_name, cat_type, "x")
            add_field(y_name, FieldType.NUMBER, "y")
        else:
            add_field(y_name, cat_type, "y")
            add_field(x_name, FieldType.NUMBER, "x")
    else:
        add_field(x_name, _scale_field_type(md.x_axis), "x")
        add_field(y_name, _scale_field_type(md.y_axis), "y")
    if color_name:
        add_field(color_name, FieldType.TEXT, "color")
    if size_name:
        add_field(size_name, FieldType.NUMBER, "size")

    rows: list[list[object]] = []
    row_marks: list[list[int]] = []
    mark_rows: dict[int, list[int]] = {}

    def emit(mark: Mark, base: list[object]) -> None:
        row = list(base)
        if color_name:
            row.append(_color_label(color_legend, mark))
        if size_name:
            row.append(_size_value(size_legend, mark))
        mark_rows.setdefault(mark.index, []).append(len(rows))
        row_marks.append([mark.index])
        rows.append(row)

    for mark in marks:
        if mark.kind == MarkKind.RECTANGLE and bar_like:
            category, value = _bar_rows(mark, md, snap_x, snap_y)
            emit(mark, [category, value])
        elif mark.kind == MarkKind.AREA:
            for x_val, value in _area_rows(mark, md, snap_x):
                emit(mark, [x_val, value])
        elif mark.kind == MarkKind.LINE and mark.vertices and len(mark.vertices) >= 2:
            for vx, vy in mark.vertices:
                emit(mark, [_invert(md.x_axis, vx, snap_x),
                            _invert(md.y_axis, vy, snap_y)])
        else:
            cx, cy = mark.center if mark.center else mark.bbox.center
            emit(mark, [_invert(md.x_axis, cx, snap_x),
                        _invert(md.y_axis, cy, snap_y)])

    table_name = name or md.title or "chart"
    table = DataTable(table_name, fields, rows)
    return InferredTable(table=table, row_marks=row_marks, mark_rows=mark_rows,
                         roles=roles)
