"""Cross-view linking: discover how chart tables relate and push selections.

Two tables link directly when one's columns are covered by the other's
(value multisets, with a small tolerance on numbers) or when they share at
least one column with equal multisets.  When direct linking fails, a bounded
search looks for a transform that explains the view: an optional derived
column (numeric bins or a date part), a groupby, and an aggregate.  Links
carry row maps so a selection on any node can be replayed onto every other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .infer import InferredTable
from .query import (DATE_PARTS, GroupResult, derive_bin, derive_date_part,
                    group_aggregate, parse_bin_label)
from .table import DataTable, FieldType

EPSILON_FRACTION = 0.01
DEFAULT_BUDGET = 10000


def column_epsilon(values: list, fraction: float = EPSILON_FRACTION) -> float:
    numbers = [v for v in values if isinstance(v, (int, float))]
    if not numbers:
        return 0.0
    return fraction * (max(numbers) - min(numbers))


def _cover(target_values: list, source_values: list, ftype: FieldType,
           epsilon: float) -> bool:
    """True when every target value matches a distinct source value."""
    if len(target_values) > len(source_values):
        return False
    if any(v is None for v in target_values):
        return False
    if ftype == FieldType.NUMBER:
        tv = sorted(target_values)
        sv = sorted(v for v in source_values if v is not None)
        i = 0
        for t in tv:
            while i < len(sv) and sv[i] < t - epsilon:
                i += 1
            if i >= len(sv) or sv[i] > t + epsilon:
                return False
            i += 1
        return True
    remaining: dict = {}
    for v in source_values:
        remaining[v] = remaining.get(v, 0) + 1
    for t in target_values:
        n = remaining.get(t, 0)
        if n == 0:
            return False
        remaining[t] = n - 1
    return True


def _values_match(a, b, ftype: FieldType, epsilon: float) -> bool:
    if a is None or b is None:
        return a is None and b is None
    if ftype == FieldType.NUMBER:
        return abs(a - b) <= epsilon
    return a == b


@dataclass
class ColumnPair:
    target_field: str
    source_field: str
    ftype: FieldType
    epsilon: float
    equality: bool


@dataclass
class TableMatch:
    pairs: list[ColumnPair]
    full: bool  # every target column assigned

    @property
    def linkable(self) -> bool:
        return self.full or any(p.equality for p in self.pairs)

    @property
    def link_pairs(self) -> list[ColumnPair]:
        """Pairs that define the link: all of them on a full match, the
        equality-grade ones otherwise."""
        if self.full:
            return self.pairs
        return [p for p in self.pairs if p.equality]


def match_tables(target: DataTable, source: DataTable,
                 fraction: float = EPSILON_FRACTION) -> TableMatch:
    """Injectively assign target columns to covering source columns."""
    t_cols = [(f, target.column(f.name)) for f in target.fields]
    s_cols = [(f, source.column(f.name)) for f in source.fields]

    candidates: list[list[tuple[int, bool, float]]] = []
    for tf, tv in t_cols:
        row = []
        eps = column_epsilon(tv, fraction)
        for si, (sf, sv) in enumerate(s_cols):
            if sf.type != tf.type:
                continue
            if not _cover(tv, sv, tf.type, eps):
                continue
            equality = len(tv) == len(sv)
            row.append((si, equality, eps))
        row.sort(key=lambda item: (not item[1],
                                   s_cols[item[0]][0].name != tf.name, item[0]))
        candidates.append(row)

    best: list[tuple[int, int, bool, float] | None] = []
    best_score = (-1, -1)

    def walk(ti: int, used: set[int], picked, score):
        nonlocal best, best_score
        remaining = len(t_cols) - ti
        if score[0] + remaining < best_score[0]:
            return
        if ti == len(t_cols):
            if score > best_score:
                best_score = score
                best = list(picked)
            return
        for si, equality, eps in candidates[ti]:
            if si in used:
                continue
            used.add(si)
            picked.append((ti, si, equality, eps))
            walk(ti + 1, used, picked, (score[0] + 1, score[1] + int(equality)))
            picked.pop()
            used.remove(si)
        picked.append(None)
        walk(ti + 1, used, picked, score)
        picked.pop()

    walk(0, set(), [], (0, 0))
    pairs = []
    for item in best:
        if item is None:
            continue
        ti, si, equality, eps = item
        pairs.append(ColumnPair(t_cols[ti][0].name, s_cols[si][0].name,
                                t_cols[ti][0].type, eps, equality))
    return TableMatch(pairs=pairs, full=len(pairs) == len(t_cols))


def build_row_map(target: DataTable, source: DataTable,
                  pairs: list[ColumnPair]) -> dict[int, list[int]]:
    """target row -> every source row agreeing on all matched columns."""
    t_idx = [(target.field_index(p.target_field), p) for p in pairs]
    s_idx = [(source.field_index(p.source_field), p) for p in pairs]
    out: dict[int, list[int]] = {}
    for ti, t_row in enumerate(target.rows):
        hits = []
        for si, s_row in enumerate(source.rows):
            ok = True
            for (tc, p), (sc, _) in zip(t_idx, s_idx):
                if not _values_match(t_row[tc], s_row[sc], p.ftype, p.epsilon):
                    ok = False
                    break
            if ok:
                hits.append(si)
        out[ti] = hits
    return out


def _invert_map(row_map: dict[int, list[int]]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for t, sources in row_map.items():
        for s in sources:
            out.setdefault(s, []).append(t)
    return out


# ---------------------------------------------------------------------------
# transform search


@dataclass(frozen=True)
class DeriveSpec:
    kind: str            # "bin" or "part"
    field: str
    edges: tuple[float, ...] = ()
    part: str = ""

    def apply(self, table: DataTable) -> DataTable:
        if self.kind == "bin":
            return derive_bin(table, self.field, list(self.edges))
        return derive_date_part(table, self.field, self.part)

    @property
    def column(self) -> str:
        if self.kind == "bin":
            return self.field + "_bin"
        return "%s_%s" % (self.field, self.part)

    def to_json(self) -> dict:
        if self.kind == "bin":
            return {"kind": "bin", "field": self.field, "edges": list(self.edges)}
        return {"kind": "part", "field": self.field, "part": self.part}


@dataclass(frozen=True)
class TransformSpec:
    derive: DeriveSpec | None
    groupby: tuple[str, ...]
    op: str
    agg_field: str | None

    def run(self, table: DataTable, base: list[int] | None = None) -> GroupResult:
        source = self.derive.apply(table) if self.derive else table
        return group_aggregate(source, list(self.groupby), self.op,
                               self.agg_field, base=base)

    def to_json(self) -> dict:
        return {
            "derive": self.derive.to_json() if self.derive else None,
            "groupby": list(self.groupby),
            "aggregate": {"op": self.op, "field": self.agg_field},
        }


def edges_from_bin_labels(values: list) -> list[float] | None:
    """Recover bin edges from a column of labels like "[0, 200)"."""
    pairs = set()
    for v in values:
        if not isinstance(v, str):
            return None
        pair = parse_bin_label(v)
        if pair is None:
            return None
        pairs.add(pair)
    ordered = sorted(pairs)
    if not ordered:
        return None
    edges = [ordered[0][0]]
    for lo, hi in ordered:
        if lo != edges[-1] or hi <= lo:
            return None
        edges.append(hi)
    return edges


def _quantile_edges(values: list) -> list[float] | None:
    numbers = sorted(v for v in values if isinstance(v, (int, float)))
    if len(numbers) < 4:
        return None
    edges = []
    for q in (0.0, 0.25, 0.5, 0.75, 1.0):
        pos = q * (len(numbers) - 1)
        lo = int(pos)
        frac = pos - lo
        v = numbers[lo] if frac == 0 else numbers[lo] * (1 - frac) + numbers[lo + 1] * frac
        if not edges or v > edges[-1]:
            edges.append(v)
    return edges if len(edges) >= 2 else None


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def take(self) -> bool:
        if self.spent >= self.limit:
            return False
        self.spent += 1
        return True

    @property
    def exhausted(self) -> bool:
        return self.spent >= self.limit


@dataclass
class TransformCandidate:
    spec: TransformSpec
    result: GroupResult
    match: TableMatch


def _aggregate_options(source: DataTable, groupby: tuple[str, ...]):
    yield ("count", None)
    for op in ("sum", "mean", "min", "max", "stdev", "median"):
        for f in source.fields:
            if f.type != FieldType.NUMBER or f.name in groupby:
                continue
            yield (op, f.name)


def search_transform(target: DataTable, source: DataTable, budget: _Budget,
                     fraction: float = EPSILON_FRACTION) -> TransformCandidate | None:
    """Find a (derive?, groupby, aggregate) whose output covers the target.

    Enumeration goes simplest-first: plain single-field groupbys, then
    derived bins and date parts, then two-field groupbys.  A candidate that
    reproduces the target exactly wins immediately; one that only matches
    within tolerance is kept as a fallback in case a later spec is exact
    (mean and median, say, can sit within epsilon of each other on small
    groups).
    """
    n_target = len(target.rows)
    if n_target == 0 or len(source.rows) == 0:
        return None

    fallback: TransformCandidate | None = None

    def attempt(spec: TransformSpec) -> TransformCandidate | None:
        nonlocal fallback
        if not budget.take():
            return None
        try:
            result = spec.run(source)
        except (ValueError, ZeroDivisionError):
            return None
        if len(result.table.rows) != n_target:
            return None
        match = match_tables(target, result.table, fraction)
        if not match.full:
            return None
        cand = TransformCandidate(spec, result, match)
        if match_tables(target, result.table, 0.0).full:
            return cand
        if fallback is None:
            fallback = cand
        return None

    source_fields = [f.name for f in source.fields]

    # stage 1: plain groupbys
    for g in source_fields:
        for op, f in _aggregate_options(source, (g,)):
            cand = attempt(TransformSpec(None, (g,), op, f))
            if cand:
                return cand
            if budget.exhausted:
                return fallback

    # stage 2: derived columns
    derives: list[DeriveSpec] = []
    hint_edges: list[list[float]] = []
    for f in target.fields:
        if f.type == FieldType.TEXT:
            edges = edges_from_bin_labels(target.column(f.name))
            if edges and edges not in hint_edges:
                hint_edges.append(edges)
    for f in source.fields:
        if f.type == FieldType.NUMBER:
            for edges in hint_edges:
                derives.append(DeriveSpec("bin", f.name, tuple(edges)))
            if not hint_edges:
                q = _quantile_edges(source.column(f.name))
                if q:
                    derives.append(DeriveSpec("bin", f.name, tuple(q)))
        elif f.type == FieldType.DATE:
            for part in DATE_PARTS:
                derives.append(DeriveSpec("part", f.name, part=part))
    for d in derives:
        try:
            derived = d.apply(source)
        except ValueError:
            continue
        for op, f in _aggregate_options(derived, (d.column,)):
            cand = attempt(TransformSpec(d, (d.column,), op, f))
            if cand:
                return cand
            if budget.exhausted:
                return fallback

    # stage 3: two-field groupbys
    for i, g1 in enumerate(source_fields):
        for g2 in source_fields[i + 1:]:
            for op, f in _aggregate_options(source, (g1, g2)):
                cand = attempt(TransformSpec(None, (g1, g2), op, f))
                if cand:
                    return cand
                if budget.exhausted:
                    return fallback
    return fallback


# ---------------------------------------------------------------------------
# graph


@dataclass
class Node:
    id: int
    name: str
    kind: str  # "view" or "external"
    table: DataTable
    inferred: InferredTable | None = None


@dataclass
class DirectLink:
    a: int
    b: int
    fields: list[tuple[str, str]]  # (a-side field, b-side field)
    a_to_b: dict[int, list[int]]
    b_to_a: dict[int, list[int]]

    def other(self, node_id: int) -> int:
        return self.b if node_id == self.a else self.a

    def map_rows(self, from_id: int, rows: list[int]) -> list[int]:
        table = self.a_to_b if from_id == self.a else self.b_to_a
        out: set[int] = set()
        for r in rows:
            out.update(table.get(r, ()))
        return sorted(out)


@dataclass
class TransformLink:
    source: int
    target: int
    spec: TransformSpec
    fields: list[tuple[str, str]]  # (target field, result field)
    result: GroupResult
    target_to_source: dict[int, list[int]]
    source_to_target: dict[int, list[int]]

    def map_rows(self, from_id: int, rows: list[int]) -> list[int]:
        table = (self.target_to_source if from_id == self.target
                 else self.source_to_target)
        out: set[int] = set()
        for r in rows:
            out.update(table.get(r, ()))
        return sorted(out)


@dataclass
class LinkGraph:
    nodes: list[Node] = field(default_factory=list)
    direct: list[DirectLink] = field(default_factory=list)
    transforms: list[TransformLink] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def node_by_name(self, name: str) -> Node:
        for node in self.nodes:
            if node.name == name:
                return node
        raise KeyError(name)

    def links_of(self, node_id: int):
        for link in self.direct:
            if node_id in (link.a, link.b):
                yield link
        for link in self.transforms:
            if node_id in (link.source, link.target):
                yield link

    def to_json(self) -> dict:
        links = []
        for link in self.direct:
            links.append({
                "kind": "direct",
                "a": self.nodes[link.a].name,
                "b": self.nodes[link.b].name,
                "fields": [list(p) for p in link.fields],
            })
        for link in self.transforms:
            links.append({
                "kind": "transform",
                "source": self.nodes[link.source].name,
                "target": self.nodes[link.target].name,
                "fields": [list(p) for p in link.fields],
                "transform": link.spec.to_json(),
            })
        return {
            "nodes": [{"name": n.name, "kind": n.kind,
                       "fields": n.table.field_names} for n in self.nodes],
            "links": links,
        }


def _transform_link_from(candidate: TransformCandidate, source_node: Node,
                         target_node: Node) -> TransformLink:
    result_table = candidate.result.table
    pairs = candidate.match.pairs
    target_to_result = build_row_map(target_node.table, result_table, pairs)
    t2s: dict[int, list[int]] = {}
    for t, result_rows in target_to_result.items():
        merged: set[int] = set()
        for r in result_rows:
            merged.update(candidate.result.provenance[r])
        t2s[t] = sorted(merged)
    return TransformLink(
        source=source_node.id, target=target_node.id, spec=candidate.spec,
        fields=[(p.target_field, p.source_field) for p in pairs],
        result=candidate.result, target_to_source=t2s,
        source_to_target=_invert_map(t2s))


def build_graph(views: list[tuple[str, InferredTable]],
                externals: list[DataTable],
                budget: int = DEFAULT_BUDGET,
                fraction: float = EPSILON_FRACTION) -> LinkGraph:
    """Link every chart view against the other views and external tables."""
    graph = LinkGraph()
    for name, inferred in views:
        table = inferred.table
        graph.nodes.append(Node(len(graph.nodes), name, "view", table, inferred))
    for table in externals:
        graph.nodes.append(Node(len(graph.nodes), table.name, "external", table))

    view_nodes = [n for n in graph.nodes if n.kind == "view"]
    has_direct: set[int] = set()

    # direct links: view-view pairs once, then view-external
    for i, a in enumerate(view_nodes):
        partners = view_nodes[i + 1:] + [n for n in graph.nodes if n.kind == "external"]
        for b in partners:
            match = match_tables(a.table, b.table, fraction)
            if not match.linkable:
                continue
            pairs = match.link_pairs
            if not pairs:
                continue
            a_to_b = build_row_map(a.table, b.table, pairs)
            b_pairs = [ColumnPair(p.source_field, p.target_field, p.ftype,
                                  p.epsilon, p.equality) for p in pairs]
            b_to_a = build_row_map(b.table, a.table, b_pairs)
            graph.direct.append(DirectLink(
                a=a.id, b=b.id,
                fields=[(p.target_field, p.source_field) for p in pairs],
                a_to_b=a_to_b, b_to_a=b_to_a))
            has_direct.add(a.id)
            has_direct.add(b.id)

    # transform links for views that found no relationship
    budget_state = _Budget(budget)
    for view in view_nodes:
        if view.id in has_direct:
            continue
        sources = ([n for n in graph.nodes if n.kind == "external"]
                   + [n for n in view_nodes if n.id != view.id])
        best: tuple[int, TransformCandidate, Node] | None = None
        for source in sources:
            cand = search_transform(view.table, source.table,
                                    budget_state, fraction)
            if cand is None:
                continue
            matched = len(cand.match.pairs)
            if best is None or matched > best[0]:
                best = (matched, cand, source)
        if best is not None:
            _, cand, source = best
            graph.transforms.append(_transform_link_from(cand, source, view))
        if budget_state.exhausted:
            graph.diagnostics.append(Diagnostic(
                "transform-budget-exhausted",
                "stopped after %d candidate transforms" % budget_state.limit, {}))
            break
    return graph


# ---------------------------------------------------------------------------
# propagation


@dataclass
class NodeUpdate:
    rows: list[int] | None = None
    overlay: GroupResult | None = None
    overlay_rows: dict[int, list[int]] = field(default_factory=dict)
    # overlay_rows: target table row -> overlay table rows


def _sources_of(graph: LinkGraph, node_id: int):
    """Neighbors acting as data sources of node_id, with the connecting link."""
    for link in graph.direct:
        if node_id in (link.a, link.b):
            yield link.other(node_id), link
    for link in graph.transforms:
        if link.target == node_id:
            yield link.source, link


def _targets_of(graph: LinkGraph, node_id: int):
    for link in graph.direct:
        if node_id in (link.a, link.b):
            yield link.other(node_id), link
    for link in graph.transforms:
        if link.source == node_id:
            yield link.target, link


def propagate(graph: LinkGraph, origin: int,
              rows: list[int]) -> dict[int, NodeUpdate]:
    """Map a selection on one node onto every linked node.

    The selection first travels up the source edges to the root tables
    (external data when present), then flows back down: direct targets get
    row sets, transform targets get a re-aggregation of the selected source
    rows to draw as an overlay.
    """
    mapped: dict[int, list[int]] = {origin: sorted(set(rows))}
    visited = {origin}
    frontier = [origin]
    roots: list[int] = []
    while frontier:
        node_id = frontier.pop(0)
        is_root = True
        for source_id, link in _sources_of(graph, node_id):
            if graph.nodes[source_id].kind == "external":
                is_root = False
            if source_id in visited:
                continue
            visited.add(source_id)
            mapped[source_id] = link.map_rows(node_id, mapped[node_id])
            frontier.append(source_id)
        if graph.nodes[node_id].kind == "external":
            roots.append(node_id)
        elif is_root and not any(True for _ in _sources_of(graph, node_id)):
            roots.append(node_id)
    if not roots:
        roots = [origin]

    updates: dict[int, NodeUpdate] = {}
    seen = set(roots)
    queue = [(r, mapped.get(r, [])) for r in roots]
    for r, row_list in queue:
        updates[r] = NodeUpdate(rows=row_list)
    while queue:
        node_id, node_rows = queue.pop(0)
        for target_id, link in _targets_of(graph, node_id):
            if target_id in seen:
                continue
            seen.add(target_id)
            if isinstance(link, TransformLink):
                update = NodeUpdate(rows=link.map_rows(node_id, node_rows))
                update.overlay = link.spec.run(graph.nodes[node_id].table,
                                               base=node_rows)
                update.overlay_rows = _overlay_rows(link, update.overlay)
                updates[target_id] = update
                queue.append((target_id, update.rows or []))
            else:
                target_rows = link.map_rows(node_id, node_rows)
                updates[target_id] = NodeUpdate(rows=target_rows)
                queue.append((target_id, target_rows))
    if origin not in updates:
        updates[origin] = NodeUpdate(rows=mapped[origin])
    return updates


def _overlay_rows(link: TransformLink, overlay: GroupResult) -> dict[int, list[int]]:
    """Match overlay groups back to target table rows via the groupby key."""
    full = link.result
    key_width = len(full.groupby)
    full_keys = {tuple(row[:key_width]): i for i, row in enumerate(full.table.rows)}
    result_to_target: dict[int, list[int]] = {}
    for t, result_rows in _result_rows_by_target(link).items():
        for r in result_rows:
            result_to_target.setdefault(r, []).append(t)
    out: dict[int, list[int]] = {}
    for oi, row in enumerate(overlay.table.rows):
        ri = full_keys.get(tuple(row[:key_width]))
        if ri is None:
            continue
        for t in result_to_target.get(ri, ()):
            out.setdefault(t, []).append(oi)
    return out


def _result_rows_by_target(link: TransformLink) -> dict[int, list[int]]:
    """target row -> rows of the full transform result that fed it."""
    provenance = link.result.provenance
    source_to_result: dict[int, set[int]] = {}
    for ri, source_rows in enumerate(provenance):
        for s in source_rows:
            source_to_result.setdefault(s, set()).add(ri)
    out: dict[int, list[int]] = {}
    for t, sources in link.target_to_source.items():
        hits: set[int] = set()
        for s in sources:
            hits.update(source_to_result.get(s, ()))
        out[t] = sorted(hits)
    return out
