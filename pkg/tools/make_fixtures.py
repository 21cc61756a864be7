#!/usr/bin/env python3
"""Regenerate the checked-in test fixture corpus under tests/fixtures/.

Every fixture is a small chart SVG with a JSON sidecar recording the ground
truth: axis tick labels, legend entries, data mark count, and the backing
rows.  Layout math lives here, independent of the package under test, so the
fixtures stay meaningful even if the package is wrong.

Run from the repository root:  python tools/make_fixtures.py
"""

from __future__ import annotations

import csv
import json
import math
import os
import random
from datetime import datetime, timedelta

ROOT = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

W, H = 760, 480
L, R, T, B = 80, 600, 60, 420

TICK_COLOR = "#333333"
LABEL_COLOR = "#333333"
GRID_COLOR = "#dddddd"
FONT = "sans-serif"

PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"]


def g(v: float) -> str:
    return format(float(v), ".10g")


def lin(v, d0, d1, r0, r1):
    return r0 + (v - d0) / (d1 - d0) * (r1 - r0)


def bin_label(lo, hi, closed: bool) -> str:
    return "[%s, %s%s" % (format(lo, "g"), format(hi, "g"), "]" if closed else ")")


class ChartBuilder:
    def __init__(self, width=W, height=H):
        self.width = width
        self.height = height
        self.parts: list[str] = []

    def rect(self, x, y, w, h, fill, stroke=None):
        attrs = 'x="%s" y="%s" width="%s" height="%s" fill="%s"' % (g(x), g(y), g(w), g(h), fill)
        if stroke:
            attrs += ' stroke="%s"' % stroke
        self.parts.append("<rect %s/>" % attrs)

    def line(self, x1, y1, x2, y2, stroke=TICK_COLOR, width=1):
        self.parts.append('<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="%s"/>'
                          % (g(x1), g(y1), g(x2), g(y2), stroke, g(width)))

    def circle(self, cx, cy, r, fill):
        self.parts.append('<circle cx="%s" cy="%s" r="%s" fill="%s"/>' % (g(cx), g(cy), g(r), fill))

    def polyline(self, points, stroke, width=2):
        body = " ".join("%s,%s" % (g(x), g(y)) for x, y in points)
        self.parts.append('<polyline points="%s" fill="none" stroke="%s" stroke-width="%s"/>'
                          % (body, stroke, g(width)))

    def polygon(self, points, fill, opacity=None):
        body = " ".join("%s,%s" % (g(x), g(y)) for x, y in points)
        extra = ' fill-opacity="%s"' % g(opacity) if opacity is not None else ""
        self.parts.append('<polygon points="%s" fill="%s"%s/>' % (body, fill, extra))

    def text(self, content, x, y, size=12, anchor="start", fill=LABEL_COLOR,
             rotate=False, weight=None):
        attrs = 'x="%s" y="%s" font-size="%s" font-family="%s" text-anchor="%s" fill="%s"' % (
            g(x), g(y), g(size), FONT, anchor, fill)
        if rotate:
            attrs = 'font-size="%s" font-family="%s" text-anchor="%s" fill="%s" transform="translate(%s %s) rotate(-90)"' % (
                g(size), FONT, anchor, fill, g(x), g(y))
        if weight:
            attrs += ' font-weight="%s"' % weight
        self.parts.append("<text %s>%s</text>" % (attrs, content))

    def finish(self) -> str:
        head = ('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
                'viewBox="0 0 %d %d">') % (self.width, self.height, self.width, self.height)
        return head + "\n" + "\n".join(self.parts) + "\n</svg>\n"

    # -- axis furniture ------------------------------------------------

    def x_axis(self, tick_px, tick_labels, title=None, grid=False):
        self.line(L, B, R, B)
        for px, label in zip(tick_px, tick_labels):
            if grid:
                self.line(px, T, px, B, stroke=GRID_COLOR)
            self.line(px, B, px, B + 6)
            self.text(label, px, B + 20, anchor="middle")
        if title:
            self.text(title, (L + R) / 2, H - 14, anchor="middle")

    def y_axis(self, tick_px, tick_labels, title=None, grid=False):
        self.line(L, T, L, B)
        for px, label in zip(tick_px, tick_labels):
            if grid:
                self.line(L, px, R, px, stroke=GRID_COLOR)
            self.line(L - 6, px, L, px)
            self.text(label, L - 10, px + 4, anchor="end")
        if title:
            self.text(title, 22, (T + B) / 2, anchor="middle", rotate=True)

    def color_legend(self, entries, title=None, x=626, y0=110, step=26):
        if title:
            self.text(title, x, y0 - 18, weight="bold")
        for i, (label, color) in enumerate(entries):
            y = y0 + i * step
            self.rect(x, y, 13, 13, fill=color)
            self.text(label, x + 20, y + 11)

    def size_legend(self, entries, area_of, title=None, x=640, y0=120, step=42):
        if title:
            self.text(title, x - 14, y0 - 26, weight="bold")
        for i, label in enumerate(entries):
            y = y0 + i * step
            r = math.sqrt(area_of(label) / math.pi)
            self.circle(x, y, r, fill="#7293cb")
            self.text(format(label, "g"), x + 26, y + 4)

    def chart_title(self, content):
        self.text(content, (L + R) / 2, 30, size=16, anchor="middle", weight="bold")


def axis_sidecar(orientation, labels, kind, title=None):
    return {"orientation": orientation, "tickLabels": list(labels),
            "scaleKind": kind, "title": title}


def write_fixture(name, svg, sidecar):
    folder = os.path.join(ROOT, name)
    os.makedirs(folder, exist_ok=True)
    with open(os.path.join(folder, "chart.svg"), "w") as fh:
        fh.write(svg)
    sidecar.setdefault("schema", "chartseam-fixture/1")
    sidecar.setdefault("generator", "manual")
    with open(os.path.join(folder, "sidecar.json"), "w") as fh:
        json.dump(sidecar, fh, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# single-view fixtures


def bar_basic():
    cats = ["drizzle", "fog", "rain", "snow", "sun"]
    vals = [42.0, 57.5, 71.0, 23.5, 88.0]
    y_ticks = [0, 20, 40, 60, 80, 100]
    c = ChartBuilder()
    c.chart_title("Days by Weather")
    centers = [lin(i + 0.5, 0, len(cats), L, R) for i in range(len(cats))]
    c.y_axis([lin(v, 0, 100, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="days", grid=True)
    c.x_axis(centers, cats, title="weather")
    for cx, v in zip(centers, vals):
        top = lin(v, 0, 100, B, T)
        c.rect(cx - 32, top, 64, B - top, fill="#4682b4")
    return c.finish(), {
        "chartType": "bar",
        "title": "Days by Weather",
        "axes": [axis_sidecar("x", cats, "categorical", "weather"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "days")],
        "legends": [],
        "markCount": len(cats),
        "fields": [{"name": "weather", "type": "text"}, {"name": "days", "type": "number"}],
        "rows": [[c_, v] for c_, v in zip(cats, vals)],
    }


def bar_horizontal():
    cats = ["amber", "coral", "indigo", "olive", "teal", "violet"]
    vals = [310.0, 455.0, 150.0, 520.0, 270.0, 395.0]
    x_ticks = [0, 100, 200, 300, 400, 500, 600]
    c = ChartBuilder()
    c.chart_title("Shipments by Label")
    centers = [lin(i + 0.5, 0, len(cats), T, B) for i in range(len(cats))]
    c.x_axis([lin(v, 0, 600, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="shipments")
    # categorical y axis: ticks out the left edge, one per band center
    c.line(L, T, L, B)
    for cy, label in zip(centers, cats):
        c.line(L - 6, cy, L, cy)
        c.text(label, L - 10, cy + 4, anchor="end")
    c.text("label", 22, (T + B) / 2, anchor="middle", rotate=True)
    for cy, v in zip(centers, vals):
        right = lin(v, 0, 600, L, R)
        c.rect(L, cy - 20, right - L, 40, fill="#b48246")
    return c.finish(), {
        "chartType": "bar",
        "title": "Shipments by Label",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "shipments"),
                 axis_sidecar("y", cats, "categorical", "label")],
        "legends": [],
        "markCount": len(cats),
        "fields": [{"name": "label", "type": "text"}, {"name": "shipments", "type": "number"}],
        "rows": [[c_, v] for c_, v in zip(cats, vals)],
    }


def bar_diverging():
    cats = ["jan", "feb", "mar", "apr", "may", "jun"]
    vals = [14.0, -8.5, 22.0, -17.5, 9.0, -3.5]
    y_ticks = [-20, -10, 0, 10, 20, 30]
    c = ChartBuilder()
    c.chart_title("Monthly Balance")
    centers = [lin(i + 0.5, 0, len(cats), L, R) for i in range(len(cats))]
    c.y_axis([lin(v, -20, 30, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="balance")
    c.x_axis(centers, cats, title="month")
    base = lin(0, -20, 30, B, T)
    for cx, v in zip(centers, vals):
        edge = lin(v, -20, 30, B, T)
        top, bottom = (edge, base) if v >= 0 else (base, edge)
        c.rect(cx - 28, top, 56, bottom - top, fill="#2f6f4f" if v >= 0 else "#a84448")
    return c.finish(), {
        "chartType": "bar",
        "title": "Monthly Balance",
        "axes": [axis_sidecar("x", cats, "categorical", "month"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "balance")],
        "legends": [],
        "markCount": len(cats),
        "diverging": True,
        "fields": [{"name": "month", "type": "text"}, {"name": "balance", "type": "number"}],
        "rows": [[c_, v] for c_, v in zip(cats, vals)],
    }


def bar_grouped_color():
    cats = ["q1", "q2", "q3", "q4"]
    series = ["alpha", "beta", "gamma"]
    vals = {
        "q1": [38.0, 52.0, 24.0], "q2": [61.0, 44.0, 33.0],
        "q3": [47.0, 70.0, 41.0], "q4": [55.0, 36.0, 62.0],
    }
    y_ticks = [0, 15, 30, 45, 60, 75]
    c = ChartBuilder()
    c.chart_title("Revenue by Quarter")
    c.y_axis([lin(v, 0, 75, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="revenue")
    centers = [lin(i + 0.5, 0, len(cats), L, R) for i in range(len(cats))]
    c.x_axis(centers, cats, title="quarter")
    band = (R - L) / len(cats)
    bar_w = 30
    rows = []
    for ci, cat in enumerate(cats):
        for si, s in enumerate(series):
            v = vals[cat][si]
            cx = centers[ci] + (si - 1) * (bar_w + 4)
            top = lin(v, 0, 75, B, T)
            c.rect(cx - bar_w / 2, top, bar_w, B - top, fill=PALETTE[si])
            rows.append([cat, s, v])
    c.color_legend([(s, PALETTE[i]) for i, s in enumerate(series)], title="product")
    return c.finish(), {
        "chartType": "groupedBar",
        "title": "Revenue by Quarter",
        "axes": [axis_sidecar("x", cats, "categorical", "quarter"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "revenue")],
        "legends": [{"type": "color", "title": "product", "entries": series}],
        "markCount": len(cats) * len(series),
        "fields": [{"name": "quarter", "type": "text"}, {"name": "product", "type": "text"},
                   {"name": "revenue", "type": "number"}],
        "rows": rows,
    }


def scatter_basic():
    pts = [(5.0, 12.0), (8.0, 30.0), (12.0, 22.0), (15.0, 48.0), (18.0, 35.0),
           (22.0, 55.0), (25.0, 41.0), (28.0, 70.0), (32.0, 58.0), (35.0, 82.0),
           (38.0, 64.0), (42.0, 90.0), (45.0, 73.0), (48.0, 96.0), (52.0, 85.0),
           (55.0, 103.0), (58.0, 92.0), (62.0, 110.0), (65.0, 99.0), (68.0, 115.0)]
    x_ticks = [0, 10, 20, 30, 40, 50, 60, 70]
    y_ticks = [0, 20, 40, 60, 80, 100, 120]
    c = ChartBuilder()
    c.chart_title("Load vs Throughput")
    c.y_axis([lin(v, 0, 120, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="throughput", grid=True)
    c.x_axis([lin(v, 0, 70, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="load", grid=True)
    for x, y in pts:
        c.circle(lin(x, 0, 70, L, R), lin(y, 0, 120, B, T), 5, fill="#d1495b")
    return c.finish(), {
        "chartType": "scatter",
        "title": "Load vs Throughput",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "load"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "throughput")],
        "legends": [],
        "markCount": len(pts),
        "fields": [{"name": "load", "type": "number"}, {"name": "throughput", "type": "number"}],
        "rows": [[x, y] for x, y in pts],
    }


def scatter_log():
    pts = [(1.5, 9.0), (3.0, 14.0), (7.0, 21.0), (20.0, 30.0), (55.0, 38.0),
           (140.0, 52.0), (300.0, 61.0), (650.0, 74.0), (900.0, 83.0),
           (2.0, 18.0), (45.0, 47.0), (500.0, 68.0)]
    x_ticks = [1, 10, 100, 1000]
    y_ticks = [0, 20, 40, 60, 80, 100]

    def px(v):
        return lin(math.log10(v), 0, 3, L, R)

    c = ChartBuilder()
    c.chart_title("Dose Response")
    c.y_axis([lin(v, 0, 100, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="response")
    c.x_axis([px(v) for v in x_ticks], [str(v) for v in x_ticks], title="dose")
    for x, y in pts:
        c.circle(px(x), lin(y, 0, 100, B, T), 5, fill="#3a7ca5")
    return c.finish(), {
        "chartType": "scatter",
        "title": "Dose Response",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "log", "dose"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "response")],
        "legends": [],
        "markCount": len(pts),
        "fields": [{"name": "dose", "type": "number"}, {"name": "response", "type": "number"}],
        "rows": [[x, y] for x, y in pts],
    }


def scatter_size():
    # (x, y, magnitude); symbol area is linear in magnitude
    pts = [(10.0, 20.0, 10.0), (20.0, 45.0, 25.0), (30.0, 30.0, 40.0),
           (40.0, 70.0, 15.0), (50.0, 55.0, 35.0), (60.0, 85.0, 20.0),
           (70.0, 40.0, 30.0), (80.0, 95.0, 40.0), (90.0, 65.0, 10.0),
           (25.0, 75.0, 35.0), (55.0, 25.0, 15.0), (85.0, 50.0, 25.0)]
    size_labels = [10.0, 20.0, 30.0, 40.0]

    def area_of(v):
        return lin(v, 10.0, 40.0, 60.0, 420.0)

    x_ticks = [0, 20, 40, 60, 80, 100]
    y_ticks = [0, 25, 50, 75, 100]
    c = ChartBuilder()
    c.chart_title("Station Magnitude")
    c.y_axis([lin(v, 0, 100, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="northing")
    c.x_axis([lin(v, 0, 100, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="easting")
    for x, y, v in pts:
        r = math.sqrt(area_of(v) / math.pi)
        c.circle(lin(x, 0, 100, L, R), lin(y, 0, 100, B, T), r, fill="#7293cb")
    c.size_legend(size_labels, area_of, title="magnitude")
    return c.finish(), {
        "chartType": "scatter",
        "title": "Station Magnitude",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "easting"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "northing")],
        "legends": [{"type": "size", "title": "magnitude",
                     "entries": [format(v, "g") for v in size_labels]}],
        "markCount": len(pts),
        "fields": [{"name": "easting", "type": "number"}, {"name": "northing", "type": "number"},
                   {"name": "magnitude", "type": "number"}],
        "rows": [[x, y, v] for x, y, v in pts],
    }


def scatter_color():
    groups = {
        "basalt": [(12.0, 30.0), (20.0, 42.0), (31.0, 50.0), (45.0, 66.0), (58.0, 72.0)],
        "gneiss": [(15.0, 18.0), (27.0, 28.0), (40.0, 36.0), (52.0, 47.0), (66.0, 55.0)],
        "schist": [(10.0, 55.0), (24.0, 64.0), (37.0, 74.0), (50.0, 84.0), (63.0, 92.0)],
    }
    x_ticks = [0, 15, 30, 45, 60, 75]
    y_ticks = [0, 20, 40, 60, 80, 100]
    names = sorted(groups)
    colors = {name: PALETTE[i] for i, name in enumerate(names)}
    c = ChartBuilder()
    c.chart_title("Mineral Content")
    c.y_axis([lin(v, 0, 100, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="silica")
    c.x_axis([lin(v, 0, 75, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="iron")
    rows = []
    for name in names:
        for x, y in groups[name]:
            c.circle(lin(x, 0, 75, L, R), lin(y, 0, 100, B, T), 5, fill=colors[name])
            rows.append([x, y, name])
    c.color_legend([(name, colors[name]) for name in names], title="rock")
    return c.finish(), {
        "chartType": "scatter",
        "title": "Mineral Content",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "iron"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "silica")],
        "legends": [{"type": "color", "title": "rock", "entries": names}],
        "markCount": sum(len(v) for v in groups.values()),
        "fields": [{"name": "iron", "type": "number"}, {"name": "silica", "type": "number"},
                   {"name": "rock", "type": "text"}],
        "rows": rows,
    }


DAY0 = datetime(2012, 3, 1)


def _date_px(day_index: float, n_days: float) -> float:
    return lin(day_index, 0, n_days, L, R)


def line_basic():
    values = [12.0, 14.5, 13.0, 16.5, 18.0, 17.0, 20.5, 22.0, 21.0, 24.5,
              23.0, 26.0, 28.5, 27.0, 30.0, 29.0, 31.5, 33.0, 32.0, 34.5,
              33.5, 36.0, 35.0, 37.5, 39.0, 38.0, 40.5, 42.0, 41.0, 43.5, 45.0]
    n = len(values) - 1  # day index 0..30
    tick_days = [0, 5, 10, 15, 20, 25, 30]
    y_ticks = [0, 10, 20, 30, 40, 50]
    c = ChartBuilder()
    c.chart_title("Price over March")
    c.y_axis([lin(v, 0, 50, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="price")
    c.x_axis([_date_px(d, n) for d in tick_days],
             [(DAY0 + timedelta(days=d)).strftime("%Y-%m-%d") for d in tick_days],
             title="date")
    pts = [(_date_px(i, n), lin(v, 0, 50, B, T)) for i, v in enumerate(values)]
    c.polyline(pts, stroke="#2a6f97")
    return c.finish(), {
        "chartType": "line",
        "title": "Price over March",
        "axes": [axis_sidecar("x", [(DAY0 + timedelta(days=d)).strftime("%Y-%m-%d")
                                    for d in tick_days], "date", "date"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "price")],
        "legends": [],
        "markCount": 1,
        "fields": [{"name": "date", "type": "date"}, {"name": "price", "type": "number"}],
        "rows": [[(DAY0 + timedelta(days=i)).strftime("%Y-%m-%d"), v]
                 for i, v in enumerate(values)],
    }


def multiline_color():
    series = {
        "astra": [18.0, 21.0, 24.5, 23.0, 27.0, 30.5, 29.0, 33.0, 36.5, 35.0, 39.0],
        "boreal": [42.0, 40.0, 43.5, 46.0, 44.5, 48.0, 51.5, 50.0, 54.0, 52.5, 56.0],
        "cirrus": [8.0, 10.5, 9.0, 12.0, 14.5, 13.0, 16.0, 18.5, 17.0, 20.0, 22.5],
    }
    n = 10  # day index 0..10
    tick_days = [0, 2, 4, 6, 8, 10]
    y_ticks = [0, 15, 30, 45, 60]
    names = sorted(series)
    colors = {name: PALETTE[i] for i, name in enumerate(names)}
    c = ChartBuilder()
    c.chart_title("Output by Plant")
    c.y_axis([lin(v, 0, 60, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="output")
    c.x_axis([_date_px(d, n) for d in tick_days],
             [(DAY0 + timedelta(days=d)).strftime("%Y-%m-%d") for d in tick_days],
             title="date")
    rows = []
    for name in names:
        pts = [(_date_px(i, n), lin(v, 0, 60, B, T)) for i, v in enumerate(series[name])]
        c.polyline(pts, stroke=colors[name])
        rows.extend([[(DAY0 + timedelta(days=i)).strftime("%Y-%m-%d"), v, name]
                     for i, v in enumerate(series[name])])
    c.color_legend([(name, colors[name]) for name in names], title="plant")
    return c.finish(), {
        "chartType": "multiLine",
        "title": "Output by Plant",
        "axes": [axis_sidecar("x", [(DAY0 + timedelta(days=d)).strftime("%Y-%m-%d")
                                    for d in tick_days], "date", "date"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "output")],
        "legends": [{"type": "color", "title": "plant", "entries": names}],
        "markCount": len(names),
        "fields": [{"name": "date", "type": "date"}, {"name": "output", "type": "number"},
                   {"name": "plant", "type": "text"}],
        "rows": rows,
    }


def area_basic():
    xs = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]
    vals = [6.0, 9.5, 8.0, 12.5, 15.0, 13.5, 18.0, 21.5, 19.0, 24.0, 27.5]
    x_ticks = [0, 2, 4, 6, 8, 10]
    y_ticks = [0, 7.5, 15, 22.5, 30]
    c = ChartBuilder()
    c.chart_title("Reservoir Volume")
    c.y_axis([lin(v, 0, 30, B, T) for v in y_ticks], [format(v, "g") for v in y_ticks],
             title="volume")
    c.x_axis([lin(v, 0, 10, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="week")
    upper = [(lin(x, 0, 10, L, R), lin(v, 0, 30, B, T)) for x, v in zip(xs, vals)]
    lower = [(lin(x, 0, 10, L, R), B) for x in reversed(xs)]
    c.polygon(upper + lower, fill="#76a5af")
    return c.finish(), {
        "chartType": "area",
        "title": "Reservoir Volume",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "week"),
                 axis_sidecar("y", [format(v, "g") for v in y_ticks], "linear", "volume")],
        "legends": [],
        "markCount": 1,
        "fields": [{"name": "week", "type": "number"}, {"name": "volume", "type": "number"}],
        "rows": [[float(x), v] for x, v in zip(xs, vals)],
    }


def area_stacked():
    xs = [0, 1, 2, 3, 4, 5, 6, 7, 8]
    series = {
        "coal": [10.0, 9.0, 11.0, 8.5, 9.5, 8.0, 7.5, 7.0, 6.5],
        "hydro": [5.0, 6.5, 6.0, 7.5, 8.0, 9.5, 9.0, 10.5, 11.0],
        "wind": [2.0, 3.0, 4.5, 5.0, 6.5, 7.0, 8.5, 9.0, 10.5],
    }
    order = ["coal", "hydro", "wind"]  # bottom to top
    x_ticks = [0, 2, 4, 6, 8]
    y_ticks = [0, 10, 20, 30, 40]
    colors = {name: PALETTE[i] for i, name in enumerate(order)}
    c = ChartBuilder()
    c.chart_title("Generation Mix")
    c.y_axis([lin(v, 0, 40, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="gigawatts")
    c.x_axis([lin(v, 0, 8, L, R) for v in x_ticks], [str(v) for v in x_ticks],
             title="year")
    acc = [0.0] * len(xs)
    rows = []
    for name in order:
        lower_vals = list(acc)
        upper_vals = [a + v for a, v in zip(acc, series[name])]
        upper = [(lin(x, 0, 8, L, R), lin(v, 0, 40, B, T)) for x, v in zip(xs, upper_vals)]
        lower = [(lin(x, 0, 8, L, R), lin(v, 0, 40, B, T))
                 for x, v in zip(reversed(xs), reversed(lower_vals))]
        c.polygon(upper + lower, fill=colors[name])
        rows.extend([[float(x), v, name] for x, v in zip(xs, series[name])])
        acc = upper_vals
    c.color_legend([(name, colors[name]) for name in order], title="source")
    return c.finish(), {
        "chartType": "stackedArea",
        "title": "Generation Mix",
        "axes": [axis_sidecar("x", [str(v) for v in x_ticks], "linear", "year"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "gigawatts")],
        "legends": [{"type": "color", "title": "source", "entries": order}],
        "markCount": len(order),
        "stackOrder": order,
        "fields": [{"name": "year", "type": "number"}, {"name": "gigawatts", "type": "number"},
                   {"name": "source", "type": "text"}],
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# linked suites

WEATHER_CLASSES = ["drizzle", "fog", "rain", "snow", "sun"]
WEATHER_TEMPS = {
    "drizzle": [8.1, 9.4, 10.2, 7.7, 8.3, 10.1],      # sum 53.8
    "fog": [11.2, 10.5, 9.8, 12.1, 10.4, 10.6],        # sum 64.6
    "rain": [13.4, 12.1, 11.9, 12.8, 13.0, 12.2],      # sum 75.4
    "snow": [6.2, 7.5, 6.8, 7.1, 7.3, 7.0],            # sum 41.9
    "sun": [15.3, 14.2, 16.1, 14.8, 13.9, 15.0],       # sum 89.3
}
WEATHER_WIND = {
    "drizzle": [3.2, 4.1, 2.8, 3.9, 4.4, 3.1],
    "fog": [1.2, 1.8, 2.1, 1.5, 2.4, 1.9],
    "rain": [5.2, 6.1, 5.8, 6.4, 5.5, 6.0],
    "snow": [7.1, 8.2, 7.6, 8.4, 7.9, 8.1],
    "sun": [2.2, 3.4, 2.9, 3.6, 2.5, 3.3],
}
JAN1 = datetime(2012, 1, 1)


def weather_rows():
    rows = []
    seen = {name: 0 for name in WEATHER_CLASSES}
    for i in range(30):
        name = WEATHER_CLASSES[i % 5]
        k = seen[name]
        seen[name] += 1
        date = JAN1 + timedelta(days=i)
        rows.append((date, name, WEATHER_TEMPS[name][k], WEATHER_WIND[name][k]))
    return rows


def _weather_scatter(rows, field_index, y_domain, y_ticks, y_title, title):
    colors = {name: PALETTE[i] for i, name in enumerate(WEATHER_CLASSES)}
    tick_days = [0, 5, 10, 15, 20, 25, 30]
    c = ChartBuilder()
    c.chart_title(title)
    c.y_axis([lin(v, y_domain[0], y_domain[1], B, T) for v in y_ticks],
             [format(v, "g") for v in y_ticks], title=y_title)
    c.x_axis([lin(d, 0, 30, L, R) for d in tick_days],
             [(JAN1 + timedelta(days=d)).strftime("%Y-%m-%d") for d in tick_days],
             title="date")
    for date, name, temp, wind in rows:
        value = (temp, wind)[field_index]
        day = (date - JAN1).days
        c.circle(lin(day, 0, 30, L, R), lin(value, y_domain[0], y_domain[1], B, T),
                 5, fill=colors[name])
    c.color_legend([(name, colors[name]) for name in WEATHER_CLASSES], title="weather")
    return c.finish()


def make_weather_trio():
    folder = os.path.join(ROOT, "linked", "weather_trio")
    os.makedirs(folder, exist_ok=True)
    rows = weather_rows()

    with open(os.path.join(folder, "external.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "weather", "temp_max", "wind"])
        for date, name, temp, wind in rows:
            writer.writerow([date.strftime("%Y-%m-%d"), name, format(temp, "g"),
                             format(wind, "g")])

    with open(os.path.join(folder, "scatter_temp.svg"), "w") as fh:
        fh.write(_weather_scatter(rows, 0, (0, 40), [0, 10, 20, 30, 40],
                                  "temp_max", "Max Temperature"))
    with open(os.path.join(folder, "scatter_wind.svg"), "w") as fh:
        fh.write(_weather_scatter(rows, 1, (0, 10), [0, 2.5, 5, 7.5, 10],
                                  "wind", "Wind Speed"))

    sums = {name: round(sum(WEATHER_TEMPS[name]), 10) for name in WEATHER_CLASSES}
    y_ticks = [0, 15, 30, 45, 60, 75, 90]
    c = ChartBuilder()
    c.chart_title("Total Max Temperature")
    c.y_axis([lin(v, 0, 90, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="temp_max")
    centers = [lin(i + 0.5, 0, 5, L, R) for i in range(5)]
    c.x_axis(centers, WEATHER_CLASSES, title="weather")
    for cx, name in zip(centers, WEATHER_CLASSES):
        top = lin(sums[name], 0, 90, B, T)
        c.rect(cx - 32, top, 64, B - top, fill="#6d6875")
    with open(os.path.join(folder, "bar_weather.svg"), "w") as fh:
        fh.write(c.finish())

    manifest = {
        "schema": "chartseam-suite/1",
        "charts": ["scatter_temp.svg", "scatter_wind.svg", "bar_weather.svg"],
        "data": ["external.csv"],
    }
    with open(os.path.join(folder, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")

    expected = {
        "schema": "chartseam-links-expected/1",
        "links": [
            {"kind": "direct", "a": "scatter_temp.svg", "b": "scatter_wind.svg",
             "fields": [["date", "date"], ["weather", "weather"]]},
            {"kind": "direct", "a": "external.csv", "b": "scatter_temp.svg",
             "fields": [["date", "date"], ["temp_max", "temp_max"], ["weather", "weather"]]},
            {"kind": "direct", "a": "external.csv", "b": "scatter_wind.svg",
             "fields": [["date", "date"], ["weather", "weather"], ["wind", "wind"]]},
            {"kind": "transform", "target": "bar_weather.svg", "source": "external.csv",
             "transform": {"derive": None, "groupby": ["weather"],
                           "aggregate": {"op": "sum", "field": "temp_max"}}},
        ],
    }
    with open(os.path.join(folder, "expected_links.json"), "w") as fh:
        json.dump(expected, fh, indent=1, sort_keys=True)
        fh.write("\n")


FLIGHT_ORIGINS = ["ABQ", "AUS", "BNA", "BOS", "BUR", "CLT"]
FLIGHT_DISTANCES = [
    110, 130, 155, 180,
    210, 240, 265, 290, 330, 370,
    405, 430, 455, 480, 520, 550, 585,
    610, 630, 655, 680, 700, 720, 745, 770, 790,
    805, 820, 840, 860, 880, 900, 920, 945, 965, 990,
]
FLIGHT_DELAY_POOL = [
    -15, -12, -8, -5, -2,
    2, 4, 6, 9, 11, 13, 16, 18,
    21, 23, 25, 27, 29, 31, 33, 35, 36, 38, 39,
    41, 43, 45, 47, 49, 51, 53, 55, 56, 58, 59, 60,
]
DISTANCE_EDGES = [0, 200, 400, 600, 800, 1000]
DELAY_EDGES = [-20, 0, 20, 40, 60]


def _sample_stdev(values):
    mean = sum(values) / len(values)
    return math.sqrt(sum((v - mean) ** 2 for v in values) / (len(values) - 1))


def flight_rows():
    """Assign delays to origins so every per-origin sample stdev sits well
    away from integer values; keeps the stdev bar chart from accidentally
    matching raw columns during linking."""
    rng = random.Random(7)
    delays = list(FLIGHT_DELAY_POOL)
    for _ in range(100000):
        rng.shuffle(delays)
        by_origin = {o: [] for o in FLIGHT_ORIGINS}
        for i, delay in enumerate(delays):
            by_origin[FLIGHT_ORIGINS[i % 6]].append(delay)
        stdevs = [_sample_stdev(by_origin[o]) for o in FLIGHT_ORIGINS]
        if all(0.25 <= s - math.floor(s) <= 0.75 for s in stdevs):
            spread = max(stdevs) - min(stdevs)
            if spread > 1.0 and min(abs(a - b) for i, a in enumerate(stdevs)
                                    for b in stdevs[i + 1:]) > 0.05 * spread:
                return [(FLIGHT_DISTANCES[i], delays[i], FLIGHT_ORIGINS[i % 6])
                        for i in range(36)]
    raise RuntimeError("no delay assignment found")


def _histogram_chart(edges, counts, x_title, title, fill):
    domain = (edges[0], edges[-1])
    y_ticks = [0, 2, 4, 6, 8, 10, 12]
    c = ChartBuilder()
    c.chart_title(title)
    c.y_axis([lin(v, 0, 12, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="count")
    c.x_axis([lin(v, domain[0], domain[1], L, R) for v in edges],
             [str(v) for v in edges], title=x_title)
    for i, count in enumerate(counts):
        x0 = lin(edges[i], domain[0], domain[1], L, R)
        x1 = lin(edges[i + 1], domain[0], domain[1], L, R)
        top = lin(count, 0, 12, B, T)
        c.rect(x0 + 1, top, (x1 - x0) - 2, B - top, fill=fill)
    return c.finish()


def make_crossfilter_trio():
    folder = os.path.join(ROOT, "linked", "crossfilter_trio")
    os.makedirs(folder, exist_ok=True)
    rows = flight_rows()

    with open(os.path.join(folder, "flights.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["distance", "delay", "origin"])
        for distance, delay, origin in rows:
            writer.writerow([distance, delay, origin])

    def bin_counts(values, edges):
        counts = [0] * (len(edges) - 1)
        for v in values:
            for i in range(len(edges) - 1):
                closed = i == len(edges) - 2
                if edges[i] <= v < edges[i + 1] or (closed and v == edges[i + 1]):
                    counts[i] += 1
                    break
        return counts

    d_counts = bin_counts([r[0] for r in rows], DISTANCE_EDGES)
    l_counts = bin_counts([r[1] for r in rows], DELAY_EDGES)
    assert d_counts == [4, 6, 7, 9, 10], d_counts
    assert l_counts == [5, 8, 11, 12], l_counts

    with open(os.path.join(folder, "hist_distance.svg"), "w") as fh:
        fh.write(_histogram_chart(DISTANCE_EDGES, d_counts, "distance",
                                  "Flights by Distance", "#5c7457"))
    with open(os.path.join(folder, "hist_delay.svg"), "w") as fh:
        fh.write(_histogram_chart(DELAY_EDGES, l_counts, "delay",
                                  "Flights by Delay", "#b07156"))

    by_origin = {o: [] for o in FLIGHT_ORIGINS}
    for distance, delay, origin in rows:
        by_origin[origin].append(delay)
    stdevs = {o: _sample_stdev(by_origin[o]) for o in FLIGHT_ORIGINS}
    y_ticks = [0, 5, 10, 15, 20, 25, 30]
    c = ChartBuilder()
    c.chart_title("Delay Spread by Origin")
    c.y_axis([lin(v, 0, 30, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="delay_stdev")
    centers = [lin(i + 0.5, 0, 6, L, R) for i in range(6)]
    c.x_axis(centers, FLIGHT_ORIGINS, title="origin")
    for cx, origin in zip(centers, FLIGHT_ORIGINS):
        top = lin(stdevs[origin], 0, 30, B, T)
        c.rect(cx - 28, top, 56, B - top, fill="#4c6085")
    with open(os.path.join(folder, "bar_origin.svg"), "w") as fh:
        fh.write(c.finish())

    manifest = {
        "schema": "chartseam-suite/1",
        "charts": ["hist_distance.svg", "hist_delay.svg", "bar_origin.svg"],
        "data": ["flights.csv"],
    }
    with open(os.path.join(folder, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")

    expected = {
        "schema": "chartseam-links-expected/1",
        "links": [
            {"kind": "transform", "target": "hist_distance.svg", "source": "flights.csv",
             "transform": {"derive": {"field": "distance", "edges": DISTANCE_EDGES},
                           "groupby": ["distance_bin"],
                           "aggregate": {"op": "count", "field": None}}},
            {"kind": "transform", "target": "hist_delay.svg", "source": "flights.csv",
             "transform": {"derive": {"field": "delay", "edges": DELAY_EDGES},
                           "groupby": ["delay_bin"],
                           "aggregate": {"op": "count", "field": None}}},
            {"kind": "transform", "target": "bar_origin.svg", "source": "flights.csv",
             "transform": {"derive": None, "groupby": ["origin"],
                           "aggregate": {"op": "stdev", "field": "delay"}}},
        ],
    }
    with open(os.path.join(folder, "expected_links.json"), "w") as fh:
        json.dump(expected, fh, indent=1, sort_keys=True)
        fh.write("\n")

    script = {
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 0, "target": "mark", "type": "select", "input": "click",
             "x": lin(300, 0, 1000, L, R), "y": (B + lin(6, 0, 12, B, T)) / 2,
             "note": "select the second distance bin"},
        ],
    }
    with open(os.path.join(folder, "script.json"), "w") as fh:
        json.dump(script, fh, indent=1, sort_keys=True)
        fh.write("\n")


CARS = [
    # weight, horsepower, displacement, acceleration, country
    (2130, 88, 97, 14.5, "europe"), (2190, 77, 105, 14.9, "europe"),
    (2264, 90, 116, 15.5, "europe"), (2300, 81, 121, 16.9, "europe"),
    (2375, 95, 133, 15.0, "europe"), (2451, 103, 140, 15.7, "europe"),
    (2511, 110, 131, 16.4, "europe"), (2670, 115, 145, 17.3, "europe"),
    (1613, 52, 72, 19.4, "japan"), (1649, 60, 79, 21.0, "japan"),
    (1755, 65, 81, 19.9, "japan"), (1834, 70, 85, 20.6, "japan"),
    (1945, 75, 89, 22.2, "japan"), (1985, 83, 91, 21.5, "japan"),
    (2045, 92, 108, 23.7, "japan"), (2085, 97, 120, 24.6, "japan"),
    (3504, 150, 307, 12.0, "usa"), (3609, 165, 318, 10.5, "usa"),
    (3693, 175, 350, 11.0, "usa"), (3761, 190, 383, 10.0, "usa"),
    (3850, 198, 390, 9.5, "usa"), (4100, 210, 400, 9.0, "usa"),
    (4209, 220, 429, 8.5, "usa"), (4354, 230, 455, 8.0, "usa"),
]

CAR_AXES = {
    "weight": ((1500, 4500), [1500, 2000, 2500, 3000, 3500, 4000, 4500]),
    "horsepower": ((40, 240), [40, 80, 120, 160, 200, 240]),
    "displacement": ((0, 500), [0, 100, 200, 300, 400, 500]),
    "acceleration": ((5, 25), [5, 10, 15, 20, 25]),
}
CAR_FIELD = {"weight": 0, "horsepower": 1, "displacement": 2, "acceleration": 3}


def _car_scatter(x_field, y_field, title):
    countries = ["europe", "japan", "usa"]
    colors = {name: PALETTE[i] for i, name in enumerate(countries)}
    (xd, x_ticks) = CAR_AXES[x_field]
    (yd, y_ticks) = CAR_AXES[y_field]
    c = ChartBuilder()
    c.chart_title(title)
    c.y_axis([lin(v, yd[0], yd[1], B, T) for v in y_ticks],
             [str(v) for v in y_ticks], title=y_field)
    c.x_axis([lin(v, xd[0], xd[1], L, R) for v in x_ticks],
             [str(v) for v in x_ticks], title=x_field)
    for row in CARS:
        x = row[CAR_FIELD[x_field]]
        y = row[CAR_FIELD[y_field]]
        c.circle(lin(x, xd[0], xd[1], L, R), lin(y, yd[0], yd[1], B, T), 5,
                 fill=colors[row[4]])
    c.color_legend([(name, colors[name]) for name in countries], title="country")
    return c.finish()


def make_scatter_trio():
    folder = os.path.join(ROOT, "linked", "scatter_trio")
    os.makedirs(folder, exist_ok=True)

    with open(os.path.join(folder, "cars.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["weight", "horsepower", "displacement", "acceleration", "country"])
        for row in CARS:
            writer.writerow([row[0], row[1], row[2], format(row[3], "g"), row[4]])

    charts = [
        ("s_weight_hp.svg", "weight", "horsepower", "Weight vs Horsepower"),
        ("s_weight_disp.svg", "weight", "displacement", "Weight vs Displacement"),
        ("s_hp_disp.svg", "horsepower", "displacement", "Horsepower vs Displacement"),
    ]
    for filename, xf, yf, title in charts:
        with open(os.path.join(folder, filename), "w") as fh:
            fh.write(_car_scatter(xf, yf, title))

    manifest = {
        "schema": "chartseam-suite/1",
        "charts": [name for name, _, _, _ in charts],
        "data": ["cars.csv"],
    }
    with open(os.path.join(folder, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")

    expected = {
        "schema": "chartseam-links-expected/1",
        "links": [
            {"kind": "direct", "a": "cars.csv", "b": "s_weight_hp.svg",
             "fields": [["country", "country"], ["horsepower", "horsepower"],
                        ["weight", "weight"]]},
            {"kind": "direct", "a": "cars.csv", "b": "s_weight_disp.svg",
             "fields": [["country", "country"], ["displacement", "displacement"],
                        ["weight", "weight"]]},
            {"kind": "direct", "a": "cars.csv", "b": "s_hp_disp.svg",
             "fields": [["country", "country"], ["displacement", "displacement"],
                        ["horsepower", "horsepower"]]},
            {"kind": "direct", "a": "s_weight_hp.svg", "b": "s_weight_disp.svg",
             "fields": [["country", "country"], ["weight", "weight"]]},
            {"kind": "direct", "a": "s_weight_hp.svg", "b": "s_hp_disp.svg",
             "fields": [["country", "country"], ["horsepower", "horsepower"]]},
            {"kind": "direct", "a": "s_weight_disp.svg", "b": "s_hp_disp.svg",
             "fields": [["country", "country"], ["displacement", "displacement"]]},
        ],
    }
    with open(os.path.join(folder, "expected_links.json"), "w") as fh:
        json.dump(expected, fh, indent=1, sort_keys=True)
        fh.write("\n")

    script = {
        "schema": "chartseam-script/1",
        "steps": [
            {"chart": 0, "target": "background", "type": "brush", "input": "drag",
             "mode": "brush",
             "x0": lin(2000, 1500, 4500, L, R), "y0": T + 10,
             "x1": lin(3000, 1500, 4500, L, R), "y1": B - 10,
             "note": "brush weights 2000..3000"},
        ],
    }
    with open(os.path.join(folder, "script.json"), "w") as fh:
        json.dump(script, fh, indent=1, sort_keys=True)
        fh.write("\n")


def histogram_counts():
    edges = [0, 200, 400, 600, 800, 1000]
    counts = [4.0, 6.0, 7.0, 9.0, 10.0]
    y_ticks = [0, 2, 4, 6, 8, 10, 12]
    c = ChartBuilder()
    c.chart_title("Trip Distances")
    c.y_axis([lin(v, 0, 12, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="count")
    c.x_axis([lin(v, 0, 1000, L, R) for v in edges], [str(v) for v in edges],
             title="distance")
    rows = []
    for i, count in enumerate(counts):
        x0 = lin(edges[i], 0, 1000, L, R)
        x1 = lin(edges[i + 1], 0, 1000, L, R)
        top = lin(count, 0, 12, B, T)
        c.rect(x0 + 1, top, (x1 - x0) - 2, B - top, fill="#5c7457")
        rows.append([bin_label(edges[i], edges[i + 1], i == len(counts) - 1), count])
    return c.finish(), {
        "chartType": "histogram",
        "title": "Trip Distances",
        "axes": [axis_sidecar("x", [str(v) for v in edges], "linear", "distance"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "count")],
        "legends": [],
        "markCount": len(counts),
        "fields": [{"name": "distance", "type": "text"}, {"name": "count", "type": "number"}],
        "rows": rows,
    }


def bar_stacked():
    cats = ["east", "north", "south", "west", "central"]
    series = ["hardware", "software", "services"]
    vals = {
        "east": [22.0, 31.0, 18.0], "north": [35.0, 14.0, 27.0],
        "south": [18.0, 26.0, 12.0],
        "west": [29.0, 22.0, 30.0], "central": [12.0, 19.0, 23.0],
    }
    y_ticks = [0, 20, 40, 60, 80, 100]
    c = ChartBuilder()
    c.chart_title("Sales by Region")
    c.y_axis([lin(v, 0, 100, B, T) for v in y_ticks], [str(v) for v in y_ticks],
             title="sales")
    centers = [lin(i + 0.5, 0, len(cats), L, R) for i in range(len(cats))]
    c.x_axis(centers, cats, title="region")
    rows = []
    for ci, cat in enumerate(cats):
        acc = 0.0
        for si, s in enumerate(series):
            v = vals[cat][si]
            y0 = lin(acc, 0, 100, B, T)
            y1 = lin(acc + v, 0, 100, B, T)
            c.rect(centers[ci] - 30, y1, 60, y0 - y1, fill=PALETTE[si])
            rows.append([cat, s, v])
            acc += v
    c.color_legend([(s, PALETTE[i]) for i, s in enumerate(series)], title="segment")
    return c.finish(), {
        "chartType": "stackedBar",
        "title": "Sales by Region",
        "axes": [axis_sidecar("x", cats, "categorical", "region"),
                 axis_sidecar("y", [str(v) for v in y_ticks], "linear", "sales")],
        "legends": [{"type": "color", "title": "segment", "entries": series}],
        "markCount": len(cats) * len(series),
        "stackOrder": series,
        "fields": [{"name": "region", "type": "text"}, {"name": "segment", "type": "text"},
                   {"name": "sales", "type": "number"}],
        "rows": rows,
    }


SINGLE_FIXTURES = [
    ("bar_basic", bar_basic),
    ("bar_horizontal", bar_horizontal),
    ("bar_diverging", bar_diverging),
    ("bar_grouped_color", bar_grouped_color),
    ("bar_stacked", bar_stacked),
    ("scatter_basic", scatter_basic),
    ("scatter_log", scatter_log),
    ("scatter_size", scatter_size),
    ("scatter_color", scatter_color),
    ("line_basic", line_basic),
    ("multiline_color", multiline_color),
    ("area_basic", area_basic),
    ("area_stacked", area_stacked),
    ("histogram_counts", histogram_counts),
]


def main():
    for name, build in SINGLE_FIXTURES:
        svg, sidecar = build()
        write_fixture(name, svg, sidecar)
        print("wrote", name)
    make_weather_trio()
    print("wrote linked/weather_trio")
    make_crossfilter_trio()
    print("wrote linked/crossfilter_trio")
    make_scatter_trio()
    print("wrote linked/scatter_trio")


if __name__ == "__main__":
    main()
