from __future__ import annotations

import itertools
import math
import statistics
from datetime import datetime

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chartseam.errors import NonOrderableField, UnknownField
from chartseam.query import (Op, Predicate, ViewTransform,
                             aggregate_field_name, bin_label, derive_bin,
                             derive_date_part, group_aggregate, order_by,
                             select_rows)
from chartseam.table import DataTable, Field, FieldType


def _table(rows=None):
    return DataTable(
        "t",
        [Field("cat", FieldType.TEXT), Field("value", FieldType.NUMBER)],
        rows if rows is not None else
        [["a", 3.0], ["b", 1.0], ["a", 2.0], ["c", 5.0], ["b", 4.0]])


def test_eq_scalar_and_membership():
    t = _table()
    assert select_rows(t, [Predicate("cat", Op.EQ, "a")]) == [0, 2]
    assert select_rows(t, [Predicate("cat", Op.EQ, ("a", "c"))]) == [0, 2, 3]


def test_ge_le_numeric():
    t = _table()
    assert select_rows(t, [Predicate("value", Op.GE, 3.0)]) == [0, 3, 4]
    assert select_rows(t, [Predicate("value", Op.LE, 2.0)]) == [1, 2]


def test_range_conjunction():
    t = _table()
    got = select_rows(t, [Predicate("value", Op.GE, 2.0),
                          Predicate("value", Op.LE, 4.0)])
    assert got == [0, 2, 4]


def test_base_restricts_candidates():
    t = _table()
    assert select_rows(t, [Predicate("cat", Op.EQ, "a")], base=[2, 3, 4]) == [2]


def test_order_comparison_on_text_raises():
    t = _table()
    with pytest.raises(NonOrderableField):
        select_rows(t, [Predicate("cat", Op.GE, "a")])


def test_unknown_field_raises():
    t = _table()
    with pytest.raises(UnknownField):
        select_rows(t, [Predicate("nope", Op.EQ, 1)])


def test_dates_are_orderable():
    t = DataTable("d", [Field("when", FieldType.DATE)],
                  [[datetime(2012, 1, d)] for d in (5, 1, 9)])
    got = select_rows(t, [Predicate("when", Op.GE, datetime(2012, 1, 5))])
    assert got == [0, 2]


def test_order_by_returns_permutation():
    t = _table()
    assert order_by(t, "value") == [1, 2, 0, 4, 3]
    assert order_by(t, "value", descending=True) == [3, 4, 0, 2, 1]


def test_order_by_missing_values_sort_last():
    t = DataTable("t", [Field("v", FieldType.NUMBER)],
                  [[2.0], [None], [1.0]])
    assert order_by(t, "v") == [2, 0, 1]


def test_group_aggregate_first_seen_order():
    t = _table()
    result = group_aggregate(t, ["cat"], "count")
    assert [row[0] for row in result.table.rows] == ["a", "b", "c"]
    assert [row[1] for row in result.table.rows] == [2, 2, 1]
    assert result.value_field == "count"


def test_group_aggregate_provenance():
    t = _table()
    result = group_aggregate(t, ["cat"], "sum", "value")
    assert result.provenance[0] == [0, 2]
    assert result.table.rows[0][1] == 5.0
    assert result.value_field == "sum_value"


def test_group_aggregate_respects_base():
    t = _table()
    result = group_aggregate(t, ["cat"], "count", base=[0, 1, 3])
    assert [row[0] for row in result.table.rows] == ["a", "b", "c"]
    assert [row[1] for row in result.table.rows] == [1, 1, 1]


def test_stdev_is_sample_stdev():
    t = _table([["a", 1.0], ["a", 2.0], ["a", 4.0]])
    result = group_aggregate(t, ["cat"], "stdev", "value")
    assert math.isclose(result.table.rows[0][1],
                        statistics.stdev([1.0, 2.0, 4.0]), rel_tol=1e-12)


def test_stdev_of_singleton_is_none():
    t = _table([["a", 1.0]])
    result = group_aggregate(t, ["cat"], "stdev", "value")
    assert result.table.rows[0][1] is None


def test_median_even_count():
    t = _table([["a", 1.0], ["a", 2.0], ["a", 3.0], ["a", 10.0]])
    result = group_aggregate(t, ["cat"], "median", "value")
    assert result.table.rows[0][1] == 2.5


def test_aggregate_field_names():
    assert aggregate_field_name("count", None) == "count"
    assert aggregate_field_name("sum", "temp_max") == "sum_temp_max"
    assert aggregate_field_name("stdev", "delay") == "stdev_delay"


def test_bin_label_format():
    assert bin_label(0.0, 200.0, closed=False) == "[0, 200)"
    assert bin_label(800.0, 1000.0, closed=True) == "[800, 1000]"
    assert bin_label(0.25, 0.5, closed=False) == "[0.25, 0.5)"


def test_derive_bin_half_open_last_closed():
    t = DataTable("t", [Field("v", FieldType.NUMBER)],
                  [[0.0], [199.9], [200.0], [1000.0]])
    derived = derive_bin(t, "v", [0.0, 200.0, 400.0, 600.0, 800.0, 1000.0])
    col = derived.column("v_bin")
    assert col == ["[0, 200)", "[0, 200)", "[200, 400)", "[800, 1000]"]


def test_derive_bin_out_of_range_diagnostic():
    t = DataTable("t", [Field("v", FieldType.NUMBER)], [[-1.0], [5.0]])
    diagnostics = []
    derived = derive_bin(t, "v", [0.0, 10.0], diagnostics)
    assert derived.column("v_bin") == [None, "[0, 10]"]
    assert any(d.code == "bin-out-of-range" for d in diagnostics)


def test_derive_date_part():
    t = DataTable("t", [Field("when", FieldType.DATE)],
                  [[datetime(2012, 3, 15)], [datetime(2011, 3, 2)]])
    derived = derive_date_part(t, "when", "month")
    assert derived.column("when_month") == [3, 3]
    derived = derive_date_part(t, "when", "year")
    assert derived.column("when_year") == [2012, 2011]


def test_view_transform_compose_and_identity():
    zoom = ViewTransform(2.0, -300.0, -240.0)
    assert zoom.compose(ViewTransform()).k == 2.0
    assert ViewTransform().is_identity
    # zooming then un-zooming about the same point is the identity
    out = ViewTransform(0.5, 150.0, 120.0)
    roundtrip = out.compose(zoom)
    assert math.isclose(roundtrip.k, 1.0)
    assert math.isclose(roundtrip.tx, 0.0, abs_tol=1e-9)
    assert math.isclose(roundtrip.ty, 0.0, abs_tol=1e-9)


# -- brute-force equivalence over a generated grid ------------------------

values = st.sampled_from([0.0, 1.0, 2.0])
labels = st.sampled_from(["x", "y"])


@st.composite
def small_tables(draw):
    n_rows = draw(st.integers(min_value=0, max_value=8))
    rows = [[draw(labels), draw(values), draw(values)] for _ in range(n_rows)]
    table = DataTable("t", [Field("cat", FieldType.TEXT),
                            Field("a", FieldType.NUMBER),
                            Field("b", FieldType.NUMBER)], rows)
    return table


@given(small_tables(),
       st.sampled_from(["cat", "a", "b"]),
       st.sampled_from([Op.EQ, Op.GE, Op.LE]),
       st.sampled_from(["x", 0.0, 1.0, 2.0]))
def test_select_matches_python_filter(table, field_name, op, value):
    col = table.field_index(field_name)
    is_text = field_name == "cat"
    if op != Op.EQ and is_text:
        # ordering a text field raises once any cell is actually compared
        if any(row[col] is not None for row in table.rows):
            with pytest.raises(NonOrderableField):
                select_rows(table, [Predicate(field_name, op, value)])
        else:
            assert select_rows(table, [Predicate(field_name, op, value)]) == []
        return
    if op == Op.EQ:
        expect = [i for i, row in enumerate(table.rows) if row[col] == value]
    elif isinstance(value, str):
        return
    elif op == Op.GE:
        expect = [i for i, row in enumerate(table.rows) if row[col] >= value]
    else:
        expect = [i for i, row in enumerate(table.rows) if row[col] <= value]
    assert select_rows(table, [Predicate(field_name, op, value)]) == expect


def test_grouped_aggregates_match_brute_force_grid():
    # exhaustive check across a deterministic grid of tiny tables
    cases = 0
    cats = ["x", "y"]
    for n in range(1, 5):
        for combo in itertools.product([0.0, 1.0, 2.0], repeat=n):
            rows = [[cats[i % 2], v, float(i)] for i, v in enumerate(combo)]
            table = DataTable("t", [Field("cat", FieldType.TEXT),
                                    Field("a", FieldType.NUMBER),
                                    Field("b", FieldType.NUMBER)], rows)
            result = group_aggregate(table, ["cat"], "sum", "a")
            expect = {}
            for label, a, _ in rows:
                expect[label] = expect.get(label, 0.0) + a
            got = {row[0]: row[1] for row in result.table.rows}
            assert got == expect
            cases += 1
    assert cases >= 100
