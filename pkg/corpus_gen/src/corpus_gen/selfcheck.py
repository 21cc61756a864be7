"""Verify a fixture: sidecar data pushed through the recorded scales
must land on the SVG mark geometry.

The renderer tags mark groups with gid attributes (marks, mark-<i>,
line-<j>, area-<j>), so the check pairs each sidecar row with its mark,
recomputes the expected position from the recorded domains and plot
area, and reports the worst deviation in pixels.
"""

from __future__ import annotations

import datetime
import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path

TOLERANCE = 0.1


class CheckError(ValueError):
    """The SVG structure does not match the sidecar (missing or extra marks)."""


@dataclass
class CheckResult:
    name: str
    errors: list

    @property
    def worst(self) -> float:
        return max(self.errors) if self.errors else 0.0

    @property
    def ok(self) -> bool:
        return self.worst <= TOLERANCE


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _groups_by_id(root) -> dict:
    out = {}
    for el in root.iter():
        if _local(el.tag) == "g" and el.get("id"):
            out[el.get("id")] = el
    return out


def _group(groups: dict, gid: str):
    if gid not in groups:
        raise CheckError("missing mark group %r" % gid)
    return groups[gid]


def _uses(group) -> list:
    pts = []
    for el in group.iter():
        if _local(el.tag) == "use":
            pts.append((float(el.get("x", "0")), float(el.get("y", "0"))))
    return pts


def _path_points(group) -> list:
    d = None
    for el in group.iter():
        if _local(el.tag) == "path":
            d = el.get("d")
            break
    if d is None:
        raise CheckError("mark group has no path")
    tokens = d.replace(",", " ").split()
    pts = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in ("M", "L"):
            pts.append((float(tokens[i + 1]), float(tokens[i + 2])))
            i += 3
        elif tok == "C":
            for k in (1, 3, 5):
                pts.append((float(tokens[i + k]), float(tokens[i + k + 1])))
            i += 7
        elif tok in ("z", "Z"):
            i += 1
        else:
            raise CheckError("unsupported path command %r" % tok)
    return pts


def _scales(sidecar):
    left, top, right, bottom = sidecar["plotArea"]
    x0, x1 = sidecar["domains"]["x"]
    y0, y1 = sidecar["domains"]["y"]

    def sx(v):
        return left + (v - x0) / (x1 - x0) * (right - left)

    def sy(v):
        return bottom - (v - y0) / (y1 - y0) * (bottom - top)

    return sx, sy


def _index(fields, name: str) -> int:
    for i, f in enumerate(fields):
        if f["name"] == name:
            return i
    raise CheckError("sidecar encoding names unknown field %r" % name)


def _x_value(fields, xi, value):
    """Map a row's x cell through the toolchain's unit conversion."""
    if fields[xi]["type"] == "date":
        import matplotlib.dates as mdates
        return float(mdates.date2num(datetime.date.fromisoformat(value)))
    return value


def _pair_errors(expected, got, errors):
    if len(expected) != len(got):
        raise CheckError("expected %d marks, SVG has %d"
                         % (len(expected), len(got)))
    for (ex, ey), (gx, gy) in zip(expected, got):
        errors.append(max(abs(ex - gx), abs(ey - gy)))


def _nearest_errors(expected, vertices, errors):
    if not vertices:
        raise CheckError("mark polygon has no vertices")
    for ex, ey in expected:
        errors.append(min(max(abs(ex - gx), abs(ey - gy))
                          for gx, gy in vertices))


def _rect_errors(group, center_x, py_lo, py_hi, errors):
    pts = _path_points(group)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    errors.append(abs((min(xs) + max(xs)) / 2.0 - center_x))
    errors.append(abs(min(ys) - min(py_lo, py_hi)))
    errors.append(abs(max(ys) - max(py_lo, py_hi)))


def _rect_edge_errors(group, left, right, py_lo, py_hi, errors):
    pts = _path_points(group)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    errors.append(abs(min(xs) - min(left, right)))
    errors.append(abs(max(xs) - max(left, right)))
    errors.append(abs(min(ys) - min(py_lo, py_hi)))
    errors.append(abs(max(ys) - max(py_lo, py_hi)))


def _series_split(rows, ci, order):
    return [[r for r in rows if r[ci] == label] for label in order]


def check(svg_bytes: bytes, sidecar: dict, name: str = "") -> CheckResult:
    """Compare SVG mark geometry against positions recomputed from the
    sidecar. Raises CheckError on structural mismatch."""
    root = ET.fromstring(svg_bytes)
    groups = _groups_by_id(root)
    sx, sy = _scales(sidecar)
    fields = sidecar["fields"]
    enc = sidecar["encodings"]
    rows = sidecar["rows"]
    kind = sidecar["chartType"]
    errors: list = []

    if kind == "scatter":
        xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
        if "color" in enc:
            ci = _index(fields, enc["color"])
            for j, label in enumerate(sidecar["seriesOrder"]):
                pts = [r for r in rows if r[ci] == label]
                want = [(sx(_x_value(fields, xi, r[xi])), sy(r[yi]))
                        for r in pts]
                _pair_errors(want, _uses(_group(groups, "marks-%d" % j)),
                             errors)
        else:
            want = [(sx(_x_value(fields, xi, r[xi])), sy(r[yi]))
                    for r in rows]
            _pair_errors(want, _uses(_group(groups, "marks")), errors)

    elif kind in ("line", "multiLine"):
        xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
        if kind == "line":
            parts = [rows]
        else:
            ci = _index(fields, enc["color"])
            parts = _series_split(rows, ci, sidecar["seriesOrder"])
        for j, pts in enumerate(parts):
            want = [(sx(r[xi]), sy(r[yi])) for r in pts]
            _pair_errors(want, _path_points(_group(groups, "line-%d" % j)),
                         errors)

    elif kind in ("area", "stackedArea"):
        xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
        if kind == "area":
            layers = [(rows, [0.0] * len(rows))]
        else:
            ci = _index(fields, enc["color"])
            layers = []
            lower = None
            for pts in _series_split(rows, ci, sidecar["seriesOrder"]):
                if lower is None:
                    lower = [0.0] * len(pts)
                layers.append((pts, list(lower)))
                lower = [lo + r[yi] for lo, r in zip(lower, pts)]
        for j, (pts, lower) in enumerate(layers):
            vertices = _path_points(_group(groups, "area-%d" % j))
            upper_want = [(sx(r[xi]), sy(lo + r[yi]))
                          for lo, r in zip(lower, pts)]
            lower_want = [(sx(r[xi]), sy(lo)) for lo, r in zip(lower, pts)]
            _nearest_errors(upper_want + lower_want, vertices, errors)

    elif kind in ("bar", "stackedBar", "groupedBar"):
        xi, yi = _index(fields, enc["x"]), _index(fields, enc["y"])
        if kind == "bar":
            for r_ix, r in enumerate(rows):
                _rect_errors(_group(groups, "mark-%d" % r_ix),
                             sx(r_ix), sy(0.0), sy(r[yi]), errors)
        else:
            ci = _index(fields, enc["color"])
            order = sidecar["seriesOrder"]
            cats = []
            for r in rows:
                if r[xi] not in cats:
                    cats.append(r[xi])
            stacked = kind == "stackedBar"
            width = sidecar["geometry"]["barWidth"]
            cum = {i: 0.0 for i in range(len(cats))}
            for label in order:
                for r_ix, r in enumerate(rows):
                    if r[ci] != label:
                        continue
                    i = cats.index(r[xi])
                    j = order.index(label)
                    if stacked:
                        lo = cum[i]
                        cum[i] = lo + r[yi]
                        _rect_errors(_group(groups, "mark-%d" % r_ix),
                                     sx(i), sy(lo), sy(lo + r[yi]), errors)
                    else:
                        pos = i + (j - (len(order) - 1) / 2.0) * width
                        _rect_errors(_group(groups, "mark-%d" % r_ix),
                                     sx(pos), sy(0.0), sy(r[yi]), errors)

    elif kind == "histogram":
        edges = sidecar["bins"]["edges"]
        counts = [r[1] for r in rows]
        if len(counts) != len(edges) - 1:
            raise CheckError("bin count does not match edges")
        for i, count in enumerate(counts):
            _rect_edge_errors(_group(groups, "mark-%d" % i),
                              sx(edges[i]), sx(edges[i + 1]),
                              sy(0.0), sy(count), errors)

    else:
        raise CheckError("no checker for chart type %r" % kind)

    if not errors:
        raise CheckError("nothing was checked")
    return CheckResult(name, errors)


def check_fixture(svg_path, sidecar_path=None) -> CheckResult:
    """Self-check one fixture on disk."""
    svg_path = Path(svg_path)
    if sidecar_path is None:
        if svg_path.name == "chart.svg":
            sidecar_path = svg_path.with_name("sidecar.json")
        else:
            sidecar_path = svg_path.with_name(svg_path.stem + ".sidecar.json")
    sidecar = json.loads(Path(sidecar_path).read_text())
    return check(svg_path.read_bytes(), sidecar, name=str(svg_path))
