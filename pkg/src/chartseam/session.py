"""Replay sessions: interaction state over one or more linked charts.

A session owns the parsed documents, their inferred tables, and the link
graph.  Applying a step updates the interacted chart's state (selection,
filter, sort order, view transform), pushes selections and filters through
the graph, and rematerializes every affected document.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import ReplayError
from .events import Action, Step, resolve_step
from .infer import InferredTable, infer_table
from .linking import LinkGraph, NodeUpdate, build_graph, propagate
from .materialize import apply_chart_state, snapshot_document
from .metadata import ChartMetadata, deconstruct
from .query import GroupResult, ViewTransform, order_by, select_rows
from .svgdoc import SvgDocument, parse_svg_file
from .table import DataTable, load_csv


@dataclass
class ChartState:
    name: str
    doc: SvgDocument
    md: ChartMetadata
    inferred: InferredTable
    snapshot: dict = field(default_factory=dict)
    selection: list[int] | None = None
    hidden: set[int] = field(default_factory=set)
    order: list[int] | None = None
    transform: ViewTransform = ViewTransform()
    overlay: GroupResult | None = None
    overlay_rows: dict[int, list[int]] = field(default_factory=dict)

    @property
    def row_count(self) -> int:
        return len(self.inferred.table.rows)

    def live_rows(self) -> list[int]:
        return [i for i in range(self.row_count) if i not in self.hidden]


class Session:
    def __init__(self, chart_paths: list[str], data_paths: list[str] | None = None,
                 budget: int | None = None, epsilon: float | None = None):
        self.charts: list[ChartState] = []
        for path in chart_paths:
            doc = parse_svg_file(path)
            md = deconstruct(doc)
            name = os.path.basename(path)
            inferred = infer_table(md, name=name)
            self.charts.append(ChartState(name=name, doc=doc, md=md,
                                          inferred=inferred,
                                          snapshot=snapshot_document(doc)))
        self.externals: list[DataTable] = []
        if data_paths:
            self.externals = [load_csv(p) for p in data_paths]
        kwargs = {}
        if budget is not None:
            kwargs["budget"] = budget
        if epsilon is not None:
            kwargs["fraction"] = epsilon
        self.graph: LinkGraph = build_graph(
            [(c.name, c.inferred) for c in self.charts], self.externals, **kwargs)
        self._node_of = {c.name: self.graph.node_by_name(c.name).id
                         for c in self.charts}
        self._chart_at_node = {node: i for i, c in enumerate(self.charts)
                               for node in [self._node_of[c.name]]}

    def chart_for_node(self, node_id: int) -> ChartState | None:
        index = self._chart_at_node.get(node_id)
        return None if index is None else self.charts[index]

    def apply(self, step: Step, dim_opacity: float = 0.2) -> list[int]:
        """Apply one step; returns the indices of charts that changed."""
        if not 0 <= step.chart < len(self.charts):
            raise ReplayError("chart index %d out of range" % step.chart)
        chart = self.charts[step.chart]
        action = resolve_step(step, chart.md, chart.inferred)

        if action.kind == "clear":
            changed = self._clear_selection()
        elif action.kind == "select":
            changed = self._apply_select(step.chart, action)
        elif action.kind == "filter":
            changed = self._apply_filter(step.chart, action)
        elif action.kind == "filter-reset":
            changed = self._reset_filter()
        elif action.kind == "sort":
            chart.order = order_by(chart.inferred.table, action.sort_field,
                                   descending=action.descending)
            changed = [step.chart]
        elif action.kind == "navigate":
            if action.reset:
                chart.transform = ViewTransform()
            else:
                chart.transform = action.transform.compose(chart.transform)
            changed = [step.chart]
        else:
            raise ReplayError("unhandled action %r" % action.kind)

        for i in changed:
            apply_chart_state(self.charts[i], dim_opacity=dim_opacity)
        return changed

    def _all_chart_indices(self) -> list[int]:
        return list(range(len(self.charts)))

    def _clear_selection(self) -> list[int]:
        for chart in self.charts:
            chart.selection = None
            chart.overlay = None
            chart.overlay_rows = {}
        return self._all_chart_indices()

    def _reset_filter(self) -> list[int]:
        for chart in self.charts:
            chart.hidden = set()
            chart.selection = None
            chart.overlay = None
            chart.overlay_rows = {}
        return self._all_chart_indices()

    def _apply_select(self, chart_index: int, action: Action) -> list[int]:
        chart = self.charts[chart_index]
        table = chart.inferred.table
        live = chart.live_rows()
        if action.append:
            matched = select_rows(table, action.predicates, base=live)
            current = set(chart.selection or [])
            if matched and set(matched) <= current:
                current -= set(matched)
            else:
                current |= set(matched)
            chart.selection = sorted(current)
        else:
            base = [i for i in (chart.selection if chart.selection is not None
                                else live) if i not in chart.hidden]
            chart.selection = select_rows(table, action.predicates, base=base)
        return self._propagate_selection(chart_index)

    def _propagate_selection(self, chart_index: int) -> list[int]:
        chart = self.charts[chart_index]
        origin = self._node_of[chart.name]
        updates = propagate(self.graph, origin, chart.selection or [])
        changed = [chart_index]
        for node_id, update in updates.items():
            other = self.chart_for_node(node_id)
            if other is None:
                continue
            idx = self._chart_at_node[node_id]
            if idx != chart_index:
                other.selection = [r for r in (update.rows or [])
                                   if r not in other.hidden]
                changed.append(idx)
            if update.overlay is not None:
                other.overlay = update.overlay
                other.overlay_rows = update.overlay_rows
            else:
                other.overlay = None
                other.overlay_rows = {}
        return sorted(set(changed))

    def _apply_filter(self, chart_index: int, action: Action) -> list[int]:
        chart = self.charts[chart_index]
        table = chart.inferred.table
        live = chart.live_rows()
        matched = set(select_rows(table, action.predicates, base=live))
        if action.filter_mode == "keep":
            newly_hidden = set(live) - matched
        else:
            newly_hidden = matched
        chart.hidden |= newly_hidden
        chart.selection = None
        chart.overlay = None
        chart.overlay_rows = {}

        origin = self._node_of[chart.name]
        updates = propagate(self.graph, origin, chart.live_rows())
        changed = [chart_index]
        for node_id, update in updates.items():
            other = self.chart_for_node(node_id)
            if other is None or other is chart:
                continue
            idx = self._chart_at_node[node_id]
            visible = set(update.rows or [])
            other.hidden = set(range(other.row_count)) - visible
            other.selection = None
            if update.overlay is not None:
                other.overlay = update.overlay
                other.overlay_rows = update.overlay_rows
            else:
                other.overlay = None
                other.overlay_rows = {}
            changed.append(idx)
        return sorted(set(changed))

    def materialize_all(self, dim_opacity: float = 0.2) -> None:
        for chart in self.charts:
            apply_chart_state(chart, dim_opacity=dim_opacity)
