"""Drive a plotting toolchain to produce one SVG fixture plus its sidecar.

The sidecar records everything a chart-parsing pipeline needs as ground
truth: the exact rows behind the marks, axis domains and tick labels,
legend entries, mark count, series order, and the plot-area geometry in
SVG pixels. Mark groups are tagged with stable gid attributes so the
self-check can pair SVG geometry with sidecar rows.
"""

from __future__ import annotations

import datetime
import io
import json
from pathlib import Path

from .spec import FixtureSpec, SpecError, ToolchainMissing

FIGSIZE = (6.0, 4.0)
DPI = 72.0
BAR_WIDTH = 0.8
FIXTURE_SCHEMA = "chartseam-fixture/1"


def _toolchain(name: str):
    if name != "matplotlib":
        raise ToolchainMissing("unsupported toolchain %r" % name)
    try:
        import matplotlib
    except ImportError:
        raise ToolchainMissing("matplotlib is not installed") from None
    return matplotlib


def bin_label(lo: float, hi: float, last: bool) -> str:
    """Half-open interval label; the final bin closes on the right."""
    return "[%g, %g%s" % (lo, hi, "]" if last else ")")


def bin_counts(values, edges) -> list[int]:
    counts = [0] * (len(edges) - 1)
    last = len(counts) - 1
    for v in values:
        for i in range(len(counts)):
            hi_ok = v <= edges[i + 1] if i == last else v < edges[i + 1]
            if edges[i] <= v and hi_ok:
                counts[i] += 1
                break
    return counts


def _index(fields, name: str) -> int:
    for i, f in enumerate(fields):
        if f["name"] == name:
            return i
    raise SpecError("encoding names unknown field %r" % name)


def _as_plot_x(fields, xi, value):
    if fields[xi]["type"] == "date":
        return datetime.date.fromisoformat(value)
    return value


def _series_order(rows, ci) -> list:
    order = []
    for r in rows:
        if r[ci] not in order:
            order.append(r[ci])
    return order


def _grid(rows, xi, ci, vi):
    """Index tidy rows by (category, series); the grid must be complete."""
    cats = _series_order(rows, xi)
    series = _series_order(rows, ci)
    value = {}
    row_of = {}
    for r_ix, r in enumerate(rows):
        key = (cats.index(r[xi]), series.index(r[ci]))
        if key in value:
            raise SpecError("duplicate (category, series) row")
        value[key] = r[vi]
        row_of[key] = r_ix
    if len(value) != len(cats) * len(series):
        raise SpecError("incomplete (category, series) grid")
    return cats, series, value, row_of


def _draw_scatter(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    meta = {"mark_count": len(rows),
            "x_kind": "date" if fields[xi]["type"] == "date" else "linear"}
    if "color" in enc:
        ci = _index(fields, enc["color"])
        order = _series_order(rows, ci)
        for j, label in enumerate(order):
            pts = [r for r in rows if r[ci] == label]
            ax.scatter([_as_plot_x(fields, xi, r[xi]) for r in pts],
                       [r[yi] for r in pts], gid="marks-%d" % j, label=label)
        ax.legend(title=enc["color"])
        meta["legend"] = {"title": enc["color"],
                          "entries": [str(s) for s in order]}
        meta["series_order"] = order
    else:
        ax.scatter([_as_plot_x(fields, xi, r[xi]) for r in rows],
                   [r[yi] for r in rows], gid="marks")
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return meta


def _draw_line(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ax.plot([r[xi] for r in rows], [r[yi] for r in rows], gid="line-0")
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": 1}


def _draw_multi_line(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ci = _index(fields, enc["color"])
    order = _series_order(rows, ci)
    for j, label in enumerate(order):
        pts = [r for r in rows if r[ci] == label]
        ax.plot([r[xi] for r in pts], [r[yi] for r in pts],
                gid="line-%d" % j, label=label)
    ax.legend(title=enc["color"])
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": len(order), "series_order": order,
            "legend": {"title": enc["color"],
                       "entries": [str(s) for s in order]}}


def _draw_bar(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    pos = range(len(rows))
    bars = ax.bar(pos, [r[yi] for r in rows], width=BAR_WIDTH)
    for i, patch in enumerate(bars):
        patch.set_gid("mark-%d" % i)
    ax.set_xticks(pos, [str(r[xi]) for r in rows])
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": len(rows), "x_kind": "categorical",
            "categories": [str(r[xi]) for r in rows],
            "geometry": {"barWidth": BAR_WIDTH}}


def _draw_stacked_bar(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ci = _index(fields, enc["color"])
    cats, series, value, row_of = _grid(rows, xi, ci, yi)
    pos = range(len(cats))
    bottoms = [0.0] * len(cats)
    for j, label in enumerate(series):
        vals = [value[(i, j)] for i in pos]
        bars = ax.bar(pos, vals, bottom=list(bottoms), width=BAR_WIDTH,
                      label=label)
        for i, patch in enumerate(bars):
            patch.set_gid("mark-%d" % row_of[(i, j)])
        bottoms = [b + v for b, v in zip(bottoms, vals)]
    ax.set_xticks(pos, [str(c) for c in cats])
    ax.legend(title=enc["color"])
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": len(rows), "x_kind": "categorical",
            "categories": [str(c) for c in cats], "series_order": series,
            "geometry": {"barWidth": BAR_WIDTH},
            "legend": {"title": enc["color"],
                       "entries": [str(s) for s in series]}}


def _draw_grouped_bar(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ci = _index(fields, enc["color"])
    cats, series, value, row_of = _grid(rows, xi, ci, yi)
    width = BAR_WIDTH / len(series)
    for j, label in enumerate(series):
        centers = [i + (j - (len(series) - 1) / 2.0) * width
                   for i in range(len(cats))]
        bars = ax.bar(centers, [value[(i, j)] for i in range(len(cats))],
                      width=width, label=label)
        for i, patch in enumerate(bars):
            patch.set_gid("mark-%d" % row_of[(i, j)])
    ax.set_xticks(range(len(cats)), [str(c) for c in cats])
    ax.legend(title=enc["color"])
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": len(rows), "x_kind": "categorical",
            "categories": [str(c) for c in cats], "series_order": series,
            "geometry": {"barWidth": width},
            "legend": {"title": enc["color"],
                       "entries": [str(s) for s in series]}}


def _draw_area(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ax.fill_between([r[xi] for r in rows], 0.0, [r[yi] for r in rows],
                    gid="area-0")
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": 1}


def _draw_stacked_area(ax, fields, rows, enc):
    xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
    ci = _index(fields, enc["color"])
    series = _series_order(rows, ci)
    xs = [r[xi] for r in rows if r[ci] == series[0]]
    lower = [0.0] * len(xs)
    for j, label in enumerate(series):
        pts = [r for r in rows if r[ci] == label]
        if [r[xi] for r in pts] != xs:
            raise SpecError("stacked series do not share an x grid")
        upper = [lo + r[yi] for lo, r in zip(lower, pts)]
        ax.fill_between(xs, list(lower), upper, gid="area-%d" % j,
                        label=label)
        lower = upper
    ax.legend(title=enc["color"])
    ax.set_xlabel(enc["x"])
    ax.set_ylabel(enc["y"])
    return {"mark_count": len(series), "series_order": series,
            "legend": {"title": enc["color"],
                       "entries": [str(s) for s in series]}}


def _draw_histogram(ax, fields, rows, enc, edges):
    vi = _index(fields, enc["x"])
    counts = bin_counts([r[vi] for r in rows], edges)
    widths = [b - a for a, b in zip(edges, edges[1:])]
    bars = ax.bar(edges[:-1], counts, width=widths, align="edge")
    for i, patch in enumerate(bars):
        patch.set_gid("mark-%d" % i)
    ax.set_xlabel(enc["x"])
    ax.set_ylabel("count")
    labels = [bin_label(a, b, i == len(counts) - 1)
              for i, (a, b) in enumerate(zip(edges, edges[1:]))]
    return {"mark_count": len(counts),
            "table_fields": [{"name": enc["x"], "type": "text"},
                             {"name": "count", "type": "number"}],
            "table_rows": [[lab, float(c)] for lab, c in zip(labels, counts)],
            "bins": {"field": enc["x"], "edges": [float(e) for e in edges]}}


_DRAWERS = {
    "scatter": _draw_scatter,
    "line": _draw_line,
    "multiLine": _draw_multi_line,
    "bar": _draw_bar,
    "stackedBar": _draw_stacked_bar,
    "groupedBar": _draw_grouped_bar,
    "area": _draw_area,
    "stackedArea": _draw_stacked_area,
}


def _axis_entry(orientation, kind, title, ticks, labels, lo, hi, categories):
    if categories is not None:
        shown = categories
    else:
        eps = (hi - lo) * 1e-9
        shown = [lab for t, lab in zip(ticks, labels)
                 if lo - eps <= t <= hi + eps]
    return {"orientation": orientation, "scaleKind": kind,
            "tickLabels": list(shown), "title": title}


def render_fixture(spec: FixtureSpec) -> tuple[bytes, dict]:
    """Render one spec to SVG bytes and its sidecar dict."""
    mpl = _toolchain(spec.toolchain)
    from matplotlib.backends.backend_svg import FigureCanvasSVG
    from matplotlib.figure import Figure

    fields, rows = spec.data()
    fig = Figure(figsize=FIGSIZE, dpi=DPI)
    FigureCanvasSVG(fig)
    ax = fig.add_subplot()
    if spec.title:
        ax.set_title(spec.title)

    if spec.chart_type == "histogram":
        meta = _draw_histogram(ax, fields, rows, spec.encodings,
                               list(spec.bins))
    else:
        meta = _DRAWERS[spec.chart_type](ax, fields, rows, spec.encodings)

    fig.draw_without_rendering()
    height = FIGSIZE[1] * DPI
    xlo, xhi = (float(v) for v in ax.get_xlim())
    ylo, yhi = (float(v) for v in ax.get_ylim())
    x_axis = _axis_entry(
        "x", meta.get("x_kind", "linear"), ax.get_xlabel(),
        [float(t) for t in ax.get_xticks()],
        [t.get_text() for t in ax.get_xticklabels()],
        xlo, xhi, meta.get("categories"))
    y_axis = _axis_entry(
        "y", "linear", ax.get_ylabel(),
        [float(t) for t in ax.get_yticks()],
        [t.get_text() for t in ax.get_yticklabels()],
        ylo, yhi, None)
    bb = ax.bbox
    plot_area = [float(bb.x0), float(height - bb.y1),
                 float(bb.x1), float(height - bb.y0)]

    with mpl.rc_context({"svg.fonttype": "none",
                         "svg.hashsalt": spec.name}):
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})

    legend = meta.get("legend")
    sidecar = {
        "axes": [x_axis, y_axis],
        "bins": meta.get("bins"),
        "chartType": spec.chart_type,
        "domains": {"x": [xlo, xhi], "y": [ylo, yhi]},
        "encodings": dict(spec.encodings),
        "fields": meta.get("table_fields", fields),
        "generator": spec.toolchain,
        "geometry": meta.get("geometry"),
        "legends": ([{"entries": legend["entries"], "title": legend["title"],
                      "type": "color"}] if legend else []),
        "markCount": meta["mark_count"],
        "plotArea": plot_area,
        "rows": meta.get("table_rows", rows),
        "schema": FIXTURE_SCHEMA,
        "seed": spec.seed,
        "seriesOrder": meta.get("series_order"),
        "title": spec.title,
        "toolchain": {"matplotlib": mpl.__version__},
    }
    return buf.getvalue(), sidecar


def write_sidecar(sidecar: dict, path: Path) -> None:
    path.write_text(json.dumps(sidecar, indent=1, sort_keys=True) + "\n")


def generate(spec: FixtureSpec, out_dir) -> tuple[Path, Path]:
    """Render a spec into out_dir as chart.svg plus sidecar.json."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    svg, sidecar = render_fixture(spec)
    svg_path = out / "chart.svg"
    svg_path.write_bytes(svg)
    sidecar_path = out / "sidecar.json"
    write_sidecar(sidecar, sidecar_path)
    return svg_path, sidecar_path
