"""Interaction taxonomy: pointer events resolved into data predicates.

Every interaction names a target (mark, legend, axis, background), a type
(select, filter, sort, navigate, clear) and an input gesture.  Resolution
turns the pixel-space event into predicates over the chart's inferred
table, so replaying a script needs no renderer: a click becomes a row
equality test, a brush becomes range tests through the inverted scales, a
legend click becomes a category test, and navigation becomes a view
transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ReplayError
from .infer import InferredTable
from .metadata import ChartMetadata
from .query import Op, Predicate, ViewTransform, parse_bin_label
from .scales import CategoricalScale, parse_tick_label
from .svgdoc import Mark
from .table import ROW_INDEX_FIELD, FieldType

SCRIPT_SCHEMA = "chartseam-script/1"

TARGETS = ("mark", "legend", "axis", "background")
TYPES = ("select", "filter", "sort", "navigate", "clear")
INPUTS = ("click", "dblclick", "drag")

ZOOM_STEP = 2.0
HIT_PAD = 1.0


@dataclass
class Step:
    chart: int
    target: str
    type: str
    input: str
    x: float | None = None
    y: float | None = None
    x1: float | None = None
    y1: float | None = None
    meta: bool = False
    mode: str | None = None
    field: str | None = None
    mark_id: int | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "Step":
        modifiers = obj.get("modifiers", {}) or {}
        step = cls(
            chart=int(obj["chart"]),
            target=obj.get("target", "background"),
            type=obj.get("type", "select"),
            input=obj.get("input", "click"),
            x=obj.get("x"), y=obj.get("y"),
            x1=obj.get("x1"), y1=obj.get("y1"),
            meta=bool(modifiers.get("meta", False)),
            mode=obj.get("mode"),
            field=obj.get("field"),
            mark_id=obj.get("markId"),
        )
        if step.target not in TARGETS:
            raise ReplayError("unknown target %r" % step.target)
        if step.type not in TYPES:
            raise ReplayError("unknown type %r" % step.type)
        if step.input not in INPUTS:
            raise ReplayError("unknown input %r" % step.input)
        return step


@dataclass
class Action:
    kind: str  # select | filter | sort | navigate | clear | filter-reset
    predicates: list[Predicate] = field(default_factory=list)
    append: bool = False
    filter_mode: str = "keep"  # keep matching rows, or "remove" them
    sort_field: str | None = None
    descending: bool = False
    transform: ViewTransform | None = None
    reset: bool = False


def hit_mark(md: ChartMetadata, x: float, y: float) -> Mark | None:
    """Topmost data mark under the pointer."""
    best = None
    for mark in md.data_marks:
        if mark.bbox.contains(x, y, pad=HIT_PAD):
            best = mark if best is None or mark.index > best.index else best
    return best


def hit_legend(md: ChartMetadata, x: float, y: float):
    for legend in md.legends:
        for entry in legend.entries:
            box = entry.symbol.bbox.union(entry.text_mark.bbox)
            if box.contains(x, y, pad=HIT_PAD):
                return legend, entry
    return None


def _role_field(inferred: InferredTable, role: str) -> str | None:
    return inferred.field_for_role(role)


def _range_predicates(inferred: InferredTable, md: ChartMetadata, axis,
                      role: str, lo_px: float, hi_px: float) -> list[Predicate]:
    name = _role_field(inferred, role)
    if axis is None or name is None:
        return []
    scale = axis.scale
    if isinstance(scale, CategoricalScale):
        lo, hi = min(lo_px, hi_px), max(lo_px, hi_px)
        labels = [label for label, pos in zip(scale.labels, scale.positions)
                  if lo <= pos <= hi]
        return [Predicate(name, Op.EQ, tuple(labels))]
    a = scale.invert(min(lo_px, hi_px))
    b = scale.invert(max(lo_px, hi_px))
    lo, hi = (a, b) if a <= b else (b, a)
    binned = _bin_labels_in_range(inferred, name, lo, hi)
    if binned is not None:
        return [Predicate(name, Op.EQ, binned)]
    return [Predicate(name, Op.GE, lo), Predicate(name, Op.LE, hi)]


def _bin_labels_in_range(inferred: InferredTable, name: str,
                         lo, hi) -> tuple[str, ...] | None:
    """Bin labels overlapping [lo, hi], if the field holds bin labels.

    A histogram keeps a numeric axis but a text field of bin labels, so a
    brush selects the bins whose intervals the brushed range touches.
    """
    if inferred.table.field(name).type != FieldType.TEXT:
        return None
    if not isinstance(lo, (int, float)):
        return None
    seen = []
    for value in inferred.table.column(name):
        if not isinstance(value, str):
            return None
        span = parse_bin_label(value)
        if span is None:
            return None
        if value not in seen:
            seen.append(value)
    return tuple(v for v in seen
                 if parse_bin_label(v)[0] <= hi and parse_bin_label(v)[1] >= lo)


def resolve_step(step: Step, md: ChartMetadata, inferred: InferredTable) -> Action:
    """Translate one scripted gesture into an action over the chart table."""
    if step.type == "clear" or (step.target == "background"
                                and step.type == "select" and step.input == "click"):
        return Action(kind="clear")

    if step.type == "navigate":
        return _resolve_navigate(step)

    if step.type == "sort":
        return _resolve_sort(step, md, inferred)

    if step.type == "filter" and step.mode == "reset":
        return Action(kind="filter-reset")

    if step.target == "mark":
        predicates = [_mark_predicate(step, md, inferred)]
    elif step.target == "legend":
        predicates = [_legend_predicate(step, md, inferred)]
    elif step.target == "background" and step.input == "drag":
        predicates = _brush_predicates(step, md, inferred)
    else:
        raise ReplayError("cannot resolve %s %s on %s"
                          % (step.input, step.type, step.target))

    if step.type == "select":
        return Action(kind="select", predicates=predicates, append=step.meta)
    if step.type == "filter":
        mode = step.mode or "keep"
        if mode == "reset":
            return Action(kind="filter-reset")
        if mode not in ("keep", "remove"):
            raise ReplayError("unknown filter mode %r" % mode)
        return Action(kind="filter", predicates=predicates, filter_mode=mode)
    raise ReplayError("cannot resolve %s on %s" % (step.type, step.target))


def _mark_predicate(step: Step, md: ChartMetadata,
                    inferred: InferredTable) -> Predicate:
    if step.mark_id is not None:
        rows = inferred.mark_rows.get(step.mark_id)
        if rows is None:
            raise ReplayError("mark %d has no rows" % step.mark_id)
        return Predicate(ROW_INDEX_FIELD, Op.EQ, tuple(rows))
    if step.x is None or step.y is None:
        raise ReplayError("mark interaction needs coordinates")
    mark = hit_mark(md, step.x, step.y)
    if mark is None:
        raise ReplayError("no mark at (%g, %g)" % (step.x, step.y))
    # a multi-row mark (line, area) selects all of its rows
    rows = inferred.mark_rows.get(mark.index, [])
    return Predicate(ROW_INDEX_FIELD, Op.EQ, tuple(rows))


def _legend_predicate(step: Step, md: ChartMetadata,
                      inferred: InferredTable) -> Predicate:
    if step.x is None or step.y is None:
        raise ReplayError("legend interaction needs coordinates")
    hit = hit_legend(md, step.x, step.y)
    if hit is None:
        raise ReplayError("no legend entry at (%g, %g)" % (step.x, step.y))
    legend, entry = hit
    if legend.type == "size":
        name = _role_field(inferred, "size")
        if name is None:
            raise ReplayError("no size field bound")
        kind, value = _parse_number(entry.label)
        if not kind:
            raise ReplayError("size label %r is not numeric" % entry.label)
        if step.meta:
            return Predicate(name, Op.GE, value)
        return Predicate(name, Op.EQ, value)
    name = _role_field(inferred, "color")
    if name is None:
        raise ReplayError("no color field bound")
    return Predicate(name, Op.EQ, entry.label)


def _parse_number(text: str):
    kind, value = parse_tick_label(text)
    if kind == "number":
        return True, value
    return False, None


def _brush_predicates(step: Step, md: ChartMetadata,
                      inferred: InferredTable) -> list[Predicate]:
    if None in (step.x, step.y, step.x1, step.y1):
        raise ReplayError("brush needs x, y, x1, y1")
    predicates = []
    predicates += _range_predicates(inferred, md, md.x_axis, "x", step.x, step.x1)
    predicates += _range_predicates(inferred, md, md.y_axis, "y", step.y, step.y1)
    if not predicates:
        raise ReplayError("brush found no scales to invert")
    return predicates


def _resolve_sort(step: Step, md: ChartMetadata,
                  inferred: InferredTable) -> Action:
    name = step.field
    if name is None:
        # sorting rearranges the category axis by the value field
        vertical = (md.view.orientation or "vertical") == "vertical"
        name = _role_field(inferred, "y" if vertical else "x")
    if name is None:
        raise ReplayError("sort found no field")
    descending = (step.mode or "asc") == "desc"
    return Action(kind="sort", sort_field=name, descending=descending)


def _resolve_navigate(step: Step) -> Action:
    mode = step.mode or ("zoom" if step.input == "dblclick" else "pan")
    if mode == "reset":
        return Action(kind="navigate", reset=True)
    if mode == "pan":
        if None in (step.x, step.y, step.x1, step.y1):
            raise ReplayError("pan needs x, y, x1, y1")
        return Action(kind="navigate",
                      transform=ViewTransform(1.0, step.x1 - step.x,
                                              step.y1 - step.y))
    if mode in ("zoom", "zoom-out"):
        if step.x is None or step.y is None:
            raise ReplayError("zoom needs a center point")
        k = ZOOM_STEP if mode == "zoom" and not step.meta else 1.0 / ZOOM_STEP
        # scale about the pointer: translate so the point stays fixed
        return Action(kind="navigate",
                      transform=ViewTransform(k, step.x * (1 - k),
                                              step.y * (1 - k)))
    raise ReplayError("unknown navigate mode %r" % mode)
