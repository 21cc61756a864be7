"""Affine transforms and axis-aligned rectangles in SVG pixel space.

SVG user space is y-down: `top` is the smaller y coordinate of a rect.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import MalformedPath

_TRANSFORM_RE = re.compile(r"(matrix|translate|scale|rotate|skewX|skewY)\s*\(([^)]*)\)")
NUMBER_RE = re.compile(r"[-+]?(?:\d*\.\d+|\d+\.?)(?:[eE][-+]?\d+)?")


@dataclass(frozen=True)
class TransformMatrix:
    """Affine map (a b c d e f): x' = a*x + c*y + e, y' = b*x + d*y + f."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0
    e: float = 0.0
    f: float = 0.0

    @staticmethod
    def identity() -> "TransformMatrix":
        return TransformMatrix()

    @staticmethod
    def translate(tx: float, ty: float = 0.0) -> "TransformMatrix":
        return TransformMatrix(1.0, 0.0, 0.0, 1.0, tx, ty)

    @staticmethod
    def scale(sx: float, sy: float | None = None) -> "TransformMatrix":
        return TransformMatrix(sx, 0.0, 0.0, sx if sy is None else sy, 0.0, 0.0)

    @staticmethod
    def rotate(degrees: float, cx: float = 0.0, cy: float = 0.0) -> "TransformMatrix":
        rad = math.radians(degrees)
        cos, sin = math.cos(rad), math.sin(rad)
        m = TransformMatrix(cos, sin, -sin, cos, 0.0, 0.0)
        if cx or cy:
            return TransformMatrix.translate(cx, cy) @ m @ TransformMatrix.translate(-cx, -cy)
        return m

    def __matmul__(self, other: "TransformMatrix") -> "TransformMatrix":
        """Compose: (self @ other) applies `other` first, then `self`."""
        return TransformMatrix(
            self.a * other.a + self.c * other.b,
            self.b * other.a + self.d * other.b,
            self.a * other.c + self.c * other.d,
            self.b * other.c + self.d * other.d,
            self.a * other.e + self.c * other.f + self.e,
            self.b * other.e + self.d * other.f + self.f,
        )

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.a * x + self.c * y + self.e, self.b * x + self.d * y + self.f)

    def inverse(self) -> "TransformMatrix":
        det = self.a * self.d - self.b * self.c
        if det == 0:
            raise ZeroDivisionError("transform is singular")
        ia, ib = self.d / det, -self.b / det
        ic, id_ = -self.c / det, self.a / det
        return TransformMatrix(
            ia, ib, ic, id_,
            -(ia * self.e + ic * self.f),
            -(ib * self.e + id_ * self.f),
        )

    @property
    def is_identity(self) -> bool:
        return self == TransformMatrix()

    @property
    def has_rotation(self) -> bool:
        """True when the map does not keep axis-parallel lines axis-parallel."""
        return abs(self.b) > 1e-12 or abs(self.c) > 1e-12

    def to_svg(self) -> str:
        return "matrix(%s)" % " ".join(_fmt(v) for v in (self.a, self.b, self.c, self.d, self.e, self.f))


def _fmt(value: float) -> str:
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def parse_transform(text: str | None) -> TransformMatrix:
    """Parse an SVG `transform` attribute into a single matrix.

    Transform list items apply left to right: the leftmost item is the
    outermost map.
    """
    result = TransformMatrix.identity()
    if not text:
        return result
    for name, body in _TRANSFORM_RE.findall(text):
        args = [float(tok) for tok in NUMBER_RE.findall(body)]
        if name == "matrix":
            if len(args) != 6:
                raise MalformedPath("matrix() needs 6 numbers, got %d" % len(args))
            item = TransformMatrix(*args)
        elif name == "translate":
            item = TransformMatrix.translate(args[0], args[1] if len(args) > 1 else 0.0)
        elif name == "scale":
            item = TransformMatrix.scale(args[0], args[1] if len(args) > 1 else None)
        elif name == "rotate":
            if len(args) == 3:
                item = TransformMatrix.rotate(args[0], args[1], args[2])
            else:
                item = TransformMatrix.rotate(args[0])
        elif name == "skewX":
            item = TransformMatrix(1.0, 0.0, math.tan(math.radians(args[0])), 1.0, 0.0, 0.0)
        else:  # skewY
            item = TransformMatrix(1.0, math.tan(math.radians(args[0])), 0.0, 1.0, 0.0, 0.0)
        result = result @ item
    return result


@dataclass
class Rect:
    left: float
    top: float
    right: float
    bottom: float

    @staticmethod
    def from_points(points) -> "Rect":
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        return Rect(min(xs), min(ys), max(xs), max(ys))

    @property
    def width(self) -> float:
        return self.right - self.left

    @property
    def height(self) -> float:
        return self.bottom - self.top

    @property
    def center_x(self) -> float:
        return (self.left + self.right) / 2.0

    @property
    def center_y(self) -> float:
        return (self.top + self.bottom) / 2.0

    @property
    def center(self) -> tuple[float, float]:
        return (self.center_x, self.center_y)

    def union(self, other: "Rect") -> "Rect":
        return Rect(
            min(self.left, other.left), min(self.top, other.top),
            max(self.right, other.right), max(self.bottom, other.bottom),
        )

    def intersect(self, other: "Rect") -> "Rect | None":
        left, top = max(self.left, other.left), max(self.top, other.top)
        right, bottom = min(self.right, other.right), min(self.bottom, other.bottom)
        if left > right or top > bottom:
            return None
        return Rect(left, top, right, bottom)

    def contains(self, x: float, y: float, pad: float = 0.0) -> bool:
        return (self.left - pad <= x <= self.right + pad
                and self.top - pad <= y <= self.bottom + pad)

    def expand(self, pad: float) -> "Rect":
        return Rect(self.left - pad, self.top - pad, self.right + pad, self.bottom + pad)

    def transformed(self, m: TransformMatrix) -> "Rect":
        corners = [
            m.apply(self.left, self.top), m.apply(self.right, self.top),
            m.apply(self.left, self.bottom), m.apply(self.right, self.bottom),
        ]
        return Rect.from_points(corners)
