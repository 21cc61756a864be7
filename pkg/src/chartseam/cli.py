"""Command line surface: deconstruct charts, link views, replay scripts.

Exit codes: 0 on success, 1 for input problems (unreadable files, malformed
XML or scripts, bad flags), 2 when parsing succeeded but inference came back
degraded (a chart with no axes and no data marks).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ChartSeamError
from .events import SCRIPT_SCHEMA, Step
from .infer import infer_table
from .linking import DEFAULT_BUDGET, EPSILON_FRACTION, build_graph
from .metadata import SCHEMA, deconstruct, metadata_to_json
from .session import Session
from .svgdoc import parse_svg_file, write_svg
from .table import load_csv


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented contract reserves 2
    # for degraded inference, so usage errors map to 1
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chartseam",
                     description="Reverse-engineer static SVG charts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("charts", nargs="+", help="chart SVG files")
        p.add_argument("--data", action="append", default=[],
                       help="external CSV table (repeatable)")
        p.add_argument("--epsilon", type=float, default=EPSILON_FRACTION,
                       help="numeric match tolerance as a fraction of column "
                            "range (default %(default)s)")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="transform search budget (default %(default)s)")
        p.add_argument("--out", help="output directory (default: stdout/cwd)")

    p_dec = sub.add_parser("deconstruct", help="emit chart metadata and table JSON")
    common(p_dec)

    p_link = sub.add_parser("link", help="emit the link graph for a set of views")
    common(p_link)

    p_replay = sub.add_parser("replay", help="apply an interaction script")
    common(p_replay)
    p_replay.add_argument("--script", required=True, help="interaction script JSON")
    p_replay.add_argument("--every-step", action="store_true",
                          help="write per-step SVG snapshots")
    p_replay.add_argument("--dim-opacity", type=float, default=0.2,
                          help="opacity for non-selected marks (default %(default)s)")
    return parser


def _stem(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _emit_json(doc: dict, out_dir: str | None, filename: str) -> None:
    text = json.dumps(doc, indent=1, sort_keys=True, default=str)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, filename), "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_externals(paths: list[str]):
    return [load_csv(p) for p in paths]


def cmd_deconstruct(args) -> int:
    degraded = False
    for path in args.charts:
        doc = parse_svg_file(path)
        md = deconstruct(doc)
        inferred = infer_table(md, name=_stem(path))
        record = metadata_to_json(md)
        record["table"] = inferred.table.to_json()
        record["diagnostics"] = [
            {"code": d.code, "message": d.message} for d in md.diagnostics]
        _emit_json(record, args.out, _stem(path) + ".json")
        if md.x_axis is None and md.y_axis is None and not md.view.data_marks:
            degraded = True
    return 2 if degraded else 0


def cmd_link(args) -> int:
    views = []
    for path in args.charts:
        doc = parse_svg_file(path)
        md = deconstruct(doc)
        views.append((os.path.basename(path), infer_table(md, name=os.path.basename(path))))
    externals = _load_externals(args.data)
    if len(views) + len(externals) < 2:
        print("chartseam link: need at least two tables (charts or --data)",
              file=sys.stderr)
        return 1
    graph = build_graph(views, externals, budget=args.budget, fraction=args.epsilon)
    record = graph.to_json()
    record["schema"] = SCHEMA
    _emit_json(record, args.out, "links.json")
    return 0


def _load_script(path: str) -> list[Step]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or doc.get("schema") != SCRIPT_SCHEMA:
        raise ChartSeamError("script schema must be %r" % SCRIPT_SCHEMA)
    steps = []
    for i, obj in enumerate(doc.get("steps", [])):
        try:
            steps.append(Step.from_json(obj))
        except (ChartSeamError, KeyError, TypeError, ValueError) as exc:
            raise ChartSeamError("step %d: %s" % (i, exc)) from exc
    return steps


def _write_svgs(session: Session, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    for chart in session.charts:
        with open(os.path.join(out_dir, chart.name), "wb") as fh:
            fh.write(write_svg(chart.doc))


def _selection_csv(session: Session, out_dir: str) -> None:
    for chart in session.charts:
        table = chart.inferred.table
        rows = chart.selection if chart.selection is not None else []
        subset = type(table)(table.name, table.fields,
                             [table.rows[i] for i in rows])
        path = os.path.join(out_dir, _stem(chart.name) + ".selected.csv")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(subset.to_csv())


def cmd_replay(args) -> int:
    steps = _load_script(args.script)
    out_dir = args.out or "."
    session = Session(args.charts, data_paths=args.data,
                      budget=args.budget, epsilon=args.epsilon)
    session.materialize_all(dim_opacity=args.dim_opacity)
    log = []
    for i, step in enumerate(steps):
        try:
            changed = session.apply(step, dim_opacity=args.dim_opacity)
        except ChartSeamError as exc:
            print("chartseam replay: step %d: %s" % (i, exc), file=sys.stderr)
            return 1
        chart = session.charts[step.chart]
        entry = {
            "step": i,
            "chart": chart.name,
            "target": step.target,
            "type": step.type,
            "input": step.input,
            "changed": [session.charts[c].name for c in changed],
            "selected": {session.charts[c].name:
                         (len(session.charts[c].selection)
                          if session.charts[c].selection is not None else None)
                         for c in changed},
        }
        if chart.selection:
            head = chart.selection[:10]
            entry["rows"] = [dict(zip(chart.inferred.table.field_names,
                                      chart.inferred.table.rows[r]))
                             for r in head]
        log.append(entry)
        if args.every_step:
            _write_svgs(session, os.path.join(out_dir, "step_%02d" % i))
    _write_svgs(session, out_dir)
    _selection_csv(session, out_dir)
    _emit_json({"schema": SCHEMA, "events": log}, out_dir, "tooltips.json")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"deconstruct": cmd_deconstruct,
               "link": cmd_link,
               "replay": cmd_replay}[args.command]
    try:
        return handler(args)
    except (ChartSeamError, OSError, json.JSONDecodeError) as exc:
        print("chartseam %s: %s" % (args.command, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
