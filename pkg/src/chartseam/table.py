"""Tabular data model shared by inferred chart tables and external files."""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from datetime import datetime
from enum import Enum

from .errors import UnknownField
from .scales import parse_tick_label

ROW_INDEX_FIELD = "__index__"


class FieldType(Enum):
    NUMBER = "number"
    TEXT = "text"
    DATE = "date"


@dataclass(frozen=True)
class Field:
    name: str
    type: FieldType


class DataTable:
    """A small in-memory table: named, typed columns over row-major values.

    Cell values are float, str, datetime or None.
    """

    def __init__(self, name: str, fields: list[Field], rows: list[list[object]]):
        self.name = name
        self.fields = list(fields)
        self.rows = [list(row) for row in rows]
        for row in self.rows:
            if len(row) != len(self.fields):
                raise ValueError("row width %d != %d fields" % (len(row), len(self.fields)))

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return "DataTable(%r, %d fields, %d rows)" % (self.name, len(self.fields), len(self.rows))

    @property
    def field_names(self) -> list[str]:
        return [f.name for f in self.fields]

    def field_index(self, name: str) -> int:
        for i, f in enumerate(self.fields):
            if f.name == name:
                return i
        raise UnknownField(name)

    def field(self, name: str) -> Field:
        return self.fields[self.field_index(name)]

    def has_field(self, name: str) -> bool:
        return any(f.name == name for f in self.fields)

    def column(self, name: str) -> list[object]:
        i = self.field_index(name)
        return [row[i] for row in self.rows]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "fields": [{"name": f.name, "type": f.type.value} for f in self.fields],
            "rows": [[_cell_to_json(v) for v in row] for row in self.rows],
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.field_names)
        for row in self.rows:
            writer.writerow([_cell_to_text(v) for v in row])
        return out.getvalue()


def _cell_to_json(value):
    if isinstance(value, datetime):
        return value.isoformat()
    return value


def _cell_to_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, datetime):
        if value.hour == value.minute == value.second == value.microsecond == 0:
            return value.strftime("%Y-%m-%d")
        return value.isoformat()
    if isinstance(value, float):
        return format(value, "g")
    return str(value)


def _column_type(values: list[str]) -> FieldType:
    kinds = set()
    for text in values:
        if text == "":
            continue
        kind, _ = parse_tick_label(text)
        kinds.add(kind)
    if kinds == {"number"}:
        return FieldType.NUMBER
    if kinds == {"date"}:
        return FieldType.DATE
    return FieldType.TEXT


def _convert(text: str, ftype: FieldType):
    if text == "":
        return None
    if ftype == FieldType.TEXT:
        return text
    kind, value = parse_tick_label(text)
    if ftype == FieldType.NUMBER and kind == "number":
        return value
    if ftype == FieldType.DATE and kind == "date":
        return value
    return text


def table_from_csv_text(name: str, text: str) -> DataTable:
    reader = csv.reader(io.StringIO(text))
    records = [row for row in reader if row]
    if not records:
        return DataTable(name, [], [])
    header, body = records[0], records[1:]
    columns = [[row[i] if i < len(row) else "" for row in body]
               for i in range(len(header))]
    fields = [Field(header[i].strip(), _column_type(columns[i]))
              for i in range(len(header))]
    rows = [[_convert(columns[i][r], fields[i].type) for i in range(len(header))]
            for r in range(len(body))]
    return DataTable(name, fields, rows)


def load_csv(path: str, name: str | None = None) -> DataTable:
    with open(path, newline="") as fh:
        text = fh.read()
    return table_from_csv_text(name or os.path.basename(path), text)
