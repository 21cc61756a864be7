"""Parse SVG path data into absolute segments and flatten curves to polylines.

Curves are flattened by adaptive subdivision so that every point of the true
curve lies within `tolerance` pixels of the emitted polyline.  Arcs are first
converted to cubic Bezier spans, which also makes them safe to push through
affine transforms.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import MalformedPath

COMMAND_RE = re.compile(r"[MmLlHhVvCcSsQqTtAaZz]")
FLOAT_RE = re.compile(r"[-+]?(?:\d*\.\d+|\d+\.?)(?:[eE][-+]?\d+)?")

# Arguments consumed per command letter (Z takes none).
_ARITY = {
    "M": 2, "L": 2, "H": 1, "V": 1, "C": 6, "S": 4, "Q": 4, "T": 2, "A": 7, "Z": 0,
}

FLATTEN_TOLERANCE = 0.1


@dataclass
class Segment:
    """One absolute path step.

    command: canonical uppercase letter (M, L, C, Q, A, Z).  H and V are
        normalized to L; S and T to C and Q.
    source: the letter as written, kept so orthogonal-command patterns
        (H/V) remain visible to shape classification.
    points: control/end points, absolute.  For A the points are
        (rx, ry, rotation_deg, large_arc, sweep, x, y) packed as floats.
    """

    command: str
    source: str
    points: tuple[float, ...]

    @property
    def end(self) -> tuple[float, float]:
        return (self.points[-2], self.points[-1])


def tokenize_path(d: str) -> list[tuple[str, list[float]]]:
    """Split path data into (command letter, numbers) runs."""
    out: list[tuple[str, list[float]]] = []
    pos = 0
    for match in COMMAND_RE.finditer(d):
        if out:
            out[-1] = (out[-1][0], [float(t) for t in FLOAT_RE.findall(d[pos:match.start()])])
        elif d[:match.start()].strip():
            raise MalformedPath("path data does not start with a command: %r" % d[:20])
        out.append((match.group(), []))
        pos = match.end()
    if not out:
        if d.strip():
            raise MalformedPath("no path commands found in %r" % d[:20])
        return []
    out[-1] = (out[-1][0], [float(t) for t in FLOAT_RE.findall(d[pos:])])
    return out


def parse_path(d: str) -> list[Segment]:
    """Normalize path data to absolute segments.

    Implicit command repetition is expanded; an implicit repeat of M becomes
    L per the SVG grammar.  Relative coordinates are resolved against the
    current point.
    """
    segments: list[Segment] = []
    cx = cy = 0.0          # current point
    sx = sy = 0.0          # subpath start
    prev_cubic_ctrl: tuple[float, float] | None = None
    prev_quad_ctrl: tuple[float, float] | None = None

    for letter, numbers in tokenize_path(d):
        upper = letter.upper()
        relative = letter.islower()
        arity = _ARITY.get(upper)
        if arity is None:
            raise MalformedPath("unknown path command %r" % letter)
        if arity == 0:
            if numbers:
                raise MalformedPath("Z takes no arguments")
            groups = [[]]
        else:
            if not numbers or len(numbers) % arity != 0:
                raise MalformedPath(
                    "command %r expects groups of %d numbers, got %d" % (letter, arity, len(numbers)))
            groups = [numbers[i:i + arity] for i in range(0, len(numbers), arity)]

        first = True
        for args in groups:
            cmd = upper
            if upper == "M" and not first:
                cmd = "L"
            if cmd == "M":
                x, y = args
                if relative:
                    x, y = cx + x, cy + y
                segments.append(Segment("M", letter, (x, y)))
                cx, cy, sx, sy = x, y, x, y
            elif cmd == "L":
                x, y = args
                if relative:
                    x, y = cx + x, cy + y
                segments.append(Segment("L", letter if upper != "M" else ("l" if relative else "L"),
                                        (x, y)))
                cx, cy = x, y
            elif cmd == "H":
                x = cx + args[0] if relative else args[0]
                segments.append(Segment("L", letter, (x, cy)))
                cx = x
            elif cmd == "V":
                y = cy + args[0] if relative else args[0]
                segments.append(Segment("L", letter, (cx, y)))
                cy = y
            elif cmd == "C":
                pts = list(args)
                if relative:
                    pts = [pts[i] + (cx if i % 2 == 0 else cy) for i in range(6)]
                segments.append(Segment("C", letter, tuple(pts)))
                prev_cubic_ctrl = (pts[2], pts[3])
                cx, cy = pts[4], pts[5]
            elif cmd == "S":
                pts = list(args)
                if relative:
                    pts = [pts[i] + (cx if i % 2 == 0 else cy) for i in range(4)]
                if prev_cubic_ctrl is not None:
                    c1 = (2 * cx - prev_cubic_ctrl[0], 2 * cy - prev_cubic_ctrl[1])
                else:
                    c1 = (cx, cy)
                segments.append(Segment("C", letter, (c1[0], c1[1], pts[0], pts[1], pts[2], pts[3])))
                prev_cubic_ctrl = (pts[0], pts[1])
                cx, cy = pts[2], pts[3]
            elif cmd == "Q":
                pts = list(args)
                if relative:
                    pts = [pts[i] + (cx if i % 2 == 0 else cy) for i in range(4)]
                segments.append(Segment("Q", letter, tuple(pts)))
                prev_quad_ctrl = (pts[0], pts[1])
                cx, cy = pts[2], pts[3]
            elif cmd == "T":
                x, y = args
                if relative:
                    x, y = cx + x, cy + y
                if prev_quad_ctrl is not None:
                    ctrl = (2 * cx - prev_quad_ctrl[0], 2 * cy - prev_quad_ctrl[1])
                else:
                    ctrl = (cx, cy)
                segments.append(Segment("Q", letter, (ctrl[0], ctrl[1], x, y)))
                prev_quad_ctrl = ctrl
                cx, cy = x, y
            elif cmd == "A":
                rx, ry, rot, large, sweep, x, y = args
                if large not in (0.0, 1.0) or sweep not in (0.0, 1.0):
                    raise MalformedPath("arc flags must be 0 or 1")
                if relative:
                    x, y = cx + x, cy + y
                segments.append(Segment("A", letter, (abs(rx), abs(ry), rot, large, sweep, x, y)))
                cx, cy = x, y
            else:  # Z
                segments.append(Segment("Z", letter, (sx, sy)))
                cx, cy = sx, sy
            if cmd not in ("C", "S"):
                prev_cubic_ctrl = None
            if cmd not in ("Q", "T"):
                prev_quad_ctrl = None
            first = False
    return segments


def arc_to_cubics(start: tuple[float, float], seg: Segment) -> list[tuple[float, ...]]:
    """Convert one arc segment to cubic control-point tuples (c1 c2 end).

    Follows the SVG endpoint-to-center conversion; the arc is split into
    spans of at most 90 degrees.
    """
    rx, ry, rot_deg, large, sweep, x2, y2 = seg.points
    x1, y1 = start
    if rx == 0 or ry == 0 or (x1 == x2 and y1 == y2):
        return [(x1, y1, x2, y2, x2, y2)]

    phi = math.radians(rot_deg % 360)
    cos_phi, sin_phi = math.cos(phi), math.sin(phi)
    dx, dy = (x1 - x2) / 2.0, (y1 - y2) / 2.0
    x1p = cos_phi * dx + sin_phi * dy
    y1p = -sin_phi * dx + cos_phi * dy

    lam = (x1p / rx) ** 2 + (y1p / ry) ** 2
    if lam > 1:
        scale = math.sqrt(lam)
        rx, ry = rx * scale, ry * scale

    num = rx * rx * ry * ry - rx * rx * y1p * y1p - ry * ry * x1p * x1p
    den = rx * rx * y1p * y1p + ry * ry * x1p * x1p
    coef = math.sqrt(max(0.0, num / den)) if den else 0.0
    if large == sweep:
        coef = -coef
    cxp = coef * rx * y1p / ry
    cyp = -coef * ry * x1p / rx
    cx = cos_phi * cxp - sin_phi * cyp + (x1 + x2) / 2.0
    cy = sin_phi * cxp + cos_phi * cyp + (y1 + y2) / 2.0

    def angle(ux: float, uy: float, vx: float, vy: float) -> float:
        dot = ux * vx + uy * vy
        norm = math.hypot(ux, uy) * math.hypot(vx, vy)
        ang = math.acos(max(-1.0, min(1.0, dot / norm)))
        return -ang if ux * vy - uy * vx < 0 else ang

    theta1 = angle(1.0, 0.0, (x1p - cxp) / rx, (y1p - cyp) / ry)
    delta = angle((x1p - cxp) / rx, (y1p - cyp) / ry, (-x1p - cxp) / rx, (-y1p - cyp) / ry)
    if not sweep and delta > 0:
        delta -= 2 * math.pi
    elif sweep and delta < 0:
        delta += 2 * math.pi

    n = max(1, int(math.ceil(abs(delta) / (math.pi / 2.0))))
    step = delta / n
    k = 4.0 / 3.0 * math.tan(step / 4.0)
    cubics = []
    for i in range(n):
        t1 = theta1 + i * step
        t2 = t1 + step
        cos1, sin1 = math.cos(t1), math.sin(t1)
        cos2, sin2 = math.cos(t2), math.sin(t2)

        def on_ellipse(cos_t: float, sin_t: float) -> tuple[float, float]:
            ex = rx * cos_t
            ey = ry * sin_t
            return (cos_phi * ex - sin_phi * ey + cx, sin_phi * ex + cos_phi * ey + cy)

        def derivative(cos_t: float, sin_t: float) -> tuple[float, float]:
            ex = -rx * sin_t
            ey = ry * cos_t
            return (cos_phi * ex - sin_phi * ey, sin_phi * ex + cos_phi * ey)

        p1 = on_ellipse(cos1, sin1)
        p2 = on_ellipse(cos2, sin2)
        d1 = derivative(cos1, sin1)
        d2 = derivative(cos2, sin2)
        cubics.append((
            p1[0] + k * d1[0], p1[1] + k * d1[1],
            p2[0] - k * d2[0], p2[1] - k * d2[1],
            p2[0], p2[1],
        ))
    return cubics


def _flat_enough(points: list[tuple[float, float]], tolerance: float) -> bool:
    """Control points within `tolerance` of the chord bound the curve there too.

    Distance is measured to the chord segment, not its carrier line: controls
    collinear with the chord but beyond its ends still bend the curve outside
    the endpoints, so they must keep forcing subdivision.
    """
    (x0, y0), (xn, yn) = points[0], points[-1]
    dx, dy = xn - x0, yn - y0
    length_sq = dx * dx + dy * dy
    for x, y in points[1:-1]:
        if length_sq < 1e-24:
            dist = math.hypot(x - x0, y - y0)
        else:
            t = ((x - x0) * dx + (y - y0) * dy) / length_sq
            t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
            dist = math.hypot(x - (x0 + t * dx), y - (y0 + t * dy))
        if dist > tolerance:
            return False
    return True


def _split_bezier(points: list[tuple[float, float]], t: float = 0.5):
    """de Casteljau split at t into two curves of the same degree."""
    left = [points[0]]
    right = [points[-1]]
    work = list(points)
    while len(work) > 1:
        work = [
            ((1 - t) * work[i][0] + t * work[i + 1][0],
             (1 - t) * work[i][1] + t * work[i + 1][1])
            for i in range(len(work) - 1)
        ]
        left.append(work[0])
        right.append(work[-1])
    return left, list(reversed(right))


def flatten_bezier(points: list[tuple[float, float]], tolerance: float,
                   _depth: int = 0) -> list[tuple[float, float]]:
    """Polyline approximation of one Bezier span, excluding the start point."""
    if _flat_enough(points, tolerance) or _depth >= 24:
        return [points[-1]]
    left, right = _split_bezier(points)
    return flatten_bezier(left, tolerance, _depth + 1) + flatten_bezier(right, tolerance, _depth + 1)


def flatten_path(segments: list[Segment],
                 tolerance: float = FLATTEN_TOLERANCE) -> list[list[tuple[float, float]]]:
    """Flatten parsed segments into subpaths of points.

    Each subpath starts at its M point; Z appends the subpath start so a
    closed ring ends where it began.
    """
    subpaths: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    cursor = (0.0, 0.0)
    for seg in segments:
        if seg.command == "M":
            if current:
                subpaths.append(current)
            current = [seg.end]
            cursor = seg.end
        elif seg.command == "L":
            current.append(seg.end)
            cursor = seg.end
        elif seg.command == "C":
            pts = [cursor, seg.points[0:2], seg.points[2:4], seg.points[4:6]]
            current.extend(flatten_bezier(pts, tolerance))
            cursor = seg.end
        elif seg.command == "Q":
            pts = [cursor, seg.points[0:2], seg.points[2:4]]
            current.extend(flatten_bezier(pts, tolerance))
            cursor = seg.end
        elif seg.command == "A":
            for cubic in arc_to_cubics(cursor, seg):
                pts = [cursor, cubic[0:2], cubic[2:4], cubic[4:6]]
                current.extend(flatten_bezier(pts, tolerance))
                cursor = cubic[4:6]
        else:  # Z
            if current and current[0] != cursor:
                current.append(current[0])
            cursor = seg.end
    if current:
        subpaths.append(current)
    return subpaths


def path_bounding_points(segments: list[Segment],
                         tolerance: float = FLATTEN_TOLERANCE) -> list[tuple[float, float]]:
    """All flattened points of a path, for bounding-box computation."""
    points: list[tuple[float, float]] = []
    for subpath in flatten_path(segments, tolerance):
        points.extend(subpath)
    return points
