"""Data predicates and table transforms.

Selections, filters, sorts and navigations all reduce to predicates over the
inferred table: equality and range tests, orderings, and view transforms.
Group aggregation and column derivation (date parts, numeric bins) produce
new tables that remember which source rows fed each output row.
"""

from __future__ import annotations

import math
import re
import statistics
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

from .diagnostics import Diagnostic
from .errors import NonOrderableField, UnknownField
from .table import ROW_INDEX_FIELD, DataTable, Field, FieldType

AGGREGATE_OPS = ("count", "sum", "mean", "min", "max", "stdev", "median")
DATE_PARTS = ("year", "month", "day")


class Op(Enum):
    EQ = "eq"
    LE = "le"
    GE = "ge"
    ORDERBY = "orderby"
    TRANSFORMBY = "transformby"


@dataclass(frozen=True)
class ViewTransform:
    """Uniform zoom and pan applied to a view: scale k about the origin,
    then translate."""
    k: float = 1.0
    tx: float = 0.0
    ty: float = 0.0

    def compose(self, other: "ViewTransform") -> "ViewTransform":
        # self applied after other
        return ViewTransform(self.k * other.k,
                             self.k * other.tx + self.tx,
                             self.k * other.ty + self.ty)

    @property
    def is_identity(self) -> bool:
        return self.k == 1.0 and self.tx == 0.0 and self.ty == 0.0


@dataclass(frozen=True)
class Predicate:
    field: str
    op: Op
    value: object = None

    def __repr__(self) -> str:
        return "Predicate(%s %s %r)" % (self.field, self.op.value, self.value)


def _comparable(value) -> bool:
    return isinstance(value, (int, float, datetime)) and not isinstance(value, bool)


def _eq(cell, wanted) -> bool:
    if isinstance(wanted, (list, tuple, set, frozenset)):
        return any(_eq(cell, w) for w in wanted)
    if cell is None or wanted is None:
        return cell is None and wanted is None
    if isinstance(cell, float) and isinstance(wanted, (int, float)):
        return cell == float(wanted)
    return cell == wanted


def _matches(table: DataTable, row_index: int, pred: Predicate) -> bool:
    if pred.field == ROW_INDEX_FIELD:
        if pred.op == Op.EQ:
            return _eq(float(row_index), pred.value) or _eq(row_index, pred.value)
        raise NonOrderableField(ROW_INDEX_FIELD + " supports equality only")
    cell = table.rows[row_index][table.field_index(pred.field)]
    if pred.op == Op.EQ:
        return _eq(cell, pred.value)
    if cell is None:
        return False
    if not _comparable(cell) or not _comparable(pred.value):
        raise NonOrderableField(pred.field)
    if pred.op == Op.LE:
        return cell <= pred.value
    if pred.op == Op.GE:
        return cell >= pred.value
    raise ValueError("predicate op %r is not a row test" % pred.op)


def select_rows(table: DataTable, predicates: list[Predicate],
                base: list[int] | None = None) -> list[int]:
    """Row indices satisfying every predicate, drawn from base or all rows."""
    rows = range(len(table.rows)) if base is None else base
    out = []
    for i in rows:
        if all(_matches(table, i, p) for p in predicates):
            out.append(i)
    return out


def order_by(table: DataTable, field_name: str, descending: bool = False,
             base: list[int] | None = None) -> list[int]:
    """Stable ordering of row indices by one column; text fields refuse."""
    ftype = table.field(field_name).type
    if ftype == FieldType.TEXT:
        raise NonOrderableField(field_name)
    col = table.field_index(field_name)
    rows = list(range(len(table.rows))) if base is None else list(base)

    def key(i):
        v = table.rows[i][col]
        missing = v is None
        if isinstance(v, datetime):
            v = v.timestamp()
        return (missing, 0.0 if missing else v)

    return sorted(rows, key=key, reverse=descending)


def _aggregate(op: str, values: list) -> object:
    if op == "count":
        return float(len(values))
    numbers = [v for v in values if isinstance(v, (int, float))]
    if not numbers:
        return None
    if op == "sum":
        return float(sum(numbers))
    if op == "mean":
        return float(statistics.fmean(numbers))
    if op == "min":
        return float(min(numbers))
    if op == "max":
        return float(max(numbers))
    if op == "median":
        return float(statistics.median(numbers))
    if op == "stdev":
        if len(numbers) < 2:
            return None
        return float(statistics.stdev(numbers))
    raise ValueError("unknown aggregate %r" % op)


@dataclass
class GroupResult:
    table: DataTable
    provenance: list[list[int]]  # output row -> source row indices
    groupby: list[str] = field(default_factory=list)
    op: str = "count"
    agg_field: str | None = None

    @property
    def value_field(self) -> str:
        return self.table.fields[-1].name


def aggregate_field_name(op: str, agg_field: str | None) -> str:
    return "count" if op == "count" else "%s_%s" % (op, agg_field)


def group_aggregate(table: DataTable, groupby: list[str], op: str,
                    agg_field: str | None = None,
                    base: list[int] | None = None) -> GroupResult:
    """Group rows by one or more columns and aggregate one measure.

    Groups appear in first-seen row order.  count needs no measure; the
    other ops skip non-numeric cells and use the sample standard deviation.
    """
    if op not in AGGREGATE_OPS:
        raise ValueError("unknown aggregate %r" % op)
    if op != "count" and agg_field is None:
        raise ValueError("aggregate %r needs a field" % op)
    key_cols = [table.field_index(name) for name in groupby]
    agg_col = table.field_index(agg_field) if agg_field is not None else None
    rows = range(len(table.rows)) if base is None else base

    order: list[tuple] = []
    members: dict[tuple, list[int]] = {}
    for i in rows:
        key = tuple(table.rows[i][c] for c in key_cols)
        if key not in members:
            members[key] = []
            order.append(key)
        members[key].append(i)

    out_fields = [table.fields[c] for c in key_cols]
    out_fields.append(Field(aggregate_field_name(op, agg_field), FieldType.NUMBER))
    out_rows = []
    provenance = []
    for key in order:
        idxs = members[key]
        values = [table.rows[i][agg_col] for i in idxs] if agg_col is not None else idxs
        out_rows.append(list(key) + [_aggregate(op, values)])
        provenance.append(idxs)
    name = "%s(%s)" % (op, table.name)
    return GroupResult(DataTable(name, out_fields, out_rows), provenance,
                       list(groupby), op, agg_field)


def bin_label(lo: float, hi: float, closed: bool) -> str:
    right = "]" if closed else ")"
    return "[%s, %s%s" % (format(lo, "g"), format(hi, "g"), right)


_BIN_LABEL_RE = re.compile(
    r"^\[\s*(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*,"
    r"\s*(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*[)\]]$")


def parse_bin_label(text: str) -> tuple[float, float] | None:
    """Inverse of bin_label: "[0, 200)" gives (0.0, 200.0)."""
    m = _BIN_LABEL_RE.match(text.strip())
    if not m:
        return None
    return float(m.group(1)), float(m.group(2))


def derive_bin(table: DataTable, field_name: str, edges: list[float],
               diagnostics: list[Diagnostic] | None = None) -> DataTable:
    """Append a text column bucketing a numeric field into half-open bins.

    The last bin is closed.  Out-of-range values get a null label and a
    diagnostic.
    """
    if len(edges) < 2 or any(b <= a for a, b in zip(edges, edges[1:])):
        raise ValueError("bin edges must be increasing")
    col = table.field_index(field_name)
    new_name = field_name + "_bin"
    labels = [bin_label(edges[i], edges[i + 1], i == len(edges) - 2)
              for i in range(len(edges) - 1)]
    out_rows = []
    missed = 0
    for row in table.rows:
        v = row[col]
        label = None
        if isinstance(v, (int, float)) and not (isinstance(v, float) and math.isnan(v)):
            if v == edges[-1]:
                label = labels[-1]
            else:
                for i in range(len(edges) - 1):
                    if edges[i] <= v < edges[i + 1]:
                        label = labels[i]
                        break
        if label is None and v is not None:
            missed += 1
        out_rows.append(list(row) + [label])
    if missed and diagnostics is not None:
        diagnostics.append(Diagnostic(
            "bin-out-of-range",
            "%d values of %s fall outside [%s, %s]" % (
                missed, field_name, format(edges[0], "g"), format(edges[-1], "g")),
            {"field": field_name}))
    fields = list(table.fields) + [Field(new_name, FieldType.TEXT)]
    return DataTable(table.name, fields, out_rows)


def derive_date_part(table: DataTable, field_name: str, part: str) -> DataTable:
    """Append a numeric column holding one calendar part of a date field."""
    if part not in DATE_PARTS:
        raise ValueError("unknown date part %r" % part)
    col = table.field_index(field_name)
    new_name = "%s_%s" % (field_name, part)
    out_rows = []
    for row in table.rows:
        v = row[col]
        value = float(getattr(v, part)) if isinstance(v, datetime) else None
        out_rows.append(list(row) + [value])
    fields = list(table.fields) + [Field(new_name, FieldType.NUMBER)]
    return DataTable(table.name, fields, out_rows)
