from __future__ import annotations

from datetime import datetime

import pytest

from chartseam.errors import UnknownField
from chartseam.table import (DataTable, Field, FieldType, load_csv,
                             table_from_csv_text)


def _table():
    return DataTable("t",
                     [Field("name", FieldType.TEXT),
                      Field("score", FieldType.NUMBER)],
                     [["a", 1.0], ["b", 2.5]])


def test_row_width_validated():
    with pytest.raises(ValueError):
        DataTable("t", [Field("a", FieldType.NUMBER)], [[1.0, 2.0]])


def test_field_lookup():
    t = _table()
    assert t.field_index("score") == 1
    assert t.has_field("name")
    assert not t.has_field("missing")
    with pytest.raises(UnknownField):
        t.field_index("missing")


def test_column_extraction():
    t = _table()
    assert t.column("score") == [1.0, 2.5]


def test_csv_round_trip():
    t = _table()
    text = t.to_csv()
    back = table_from_csv_text("t", text)
    assert back.field_names == t.field_names
    assert back.rows == t.rows
    assert [f.type for f in back.fields] == [FieldType.TEXT, FieldType.NUMBER]


def test_csv_quotes_commas():
    t = DataTable("t", [Field("label", FieldType.TEXT)], [["[0, 200)"]])
    text = t.to_csv()
    assert '"[0, 200)"' in text
    back = table_from_csv_text("t", text)
    assert back.rows == [["[0, 200)"]]


def test_csv_dates_iso():
    t = DataTable("t", [Field("when", FieldType.DATE)],
                  [[datetime(2012, 1, 6)]])
    assert "2012-01-06" in t.to_csv()
    back = table_from_csv_text("t", t.to_csv())
    assert back.rows == [[datetime(2012, 1, 6)]]
    assert back.fields[0].type == FieldType.DATE


def test_json_shape():
    doc = _table().to_json()
    assert doc["name"] == "t"
    assert doc["fields"] == [{"name": "name", "type": "text"},
                             {"name": "score", "type": "number"}]
    assert doc["rows"] == [["a", 1.0], ["b", 2.5]]


def test_load_csv_names_table_after_file(tmp_path):
    path = tmp_path / "flights.csv"
    path.write_text("origin,delay\nABQ,5\nBOS,-3\n")
    t = load_csv(str(path))
    assert t.name == "flights.csv"
    assert t.fields[1].type == FieldType.NUMBER
    assert t.rows == [["ABQ", 5.0], ["BOS", -3.0]]


def test_mixed_column_becomes_text():
    text = "v\n1\nx\n"
    t = table_from_csv_text("m", text)
    assert t.fields[0].type == FieldType.TEXT
    assert t.rows == [["1"], ["x"]]
