"""SVG document model: resolved marks with global geometry and style.

Parsing walks the element tree in pre-order, accumulating group transforms
and inheritable style so every drawable element becomes a Mark positioned in
global pixel space.  `use` elements are inlined once against their target.

Text extents are estimated, not measured: a glyph is 0.60 em wide and a line
is 1.2 em tall.  Downstream clustering only needs estimates that are
consistent between texts of the same style, which this satisfies.
"""

from __future__ import annotations

import enum
import io
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .errors import MalformedXml, UnsupportedUnit
from .geom import Rect, TransformMatrix, parse_transform
from .svgpath import FLATTEN_TOLERANCE, Segment, flatten_path, parse_path

SVG_NS = "http://www.w3.org/2000/svg"
XLINK_NS = "http://www.w3.org/1999/xlink"

ET.register_namespace("", SVG_NS)
ET.register_namespace("xlink", XLINK_NS)

ANNOTATION_CLASS = "divi-annotation"

# Em-relative text metrics used for estimated extents.
GLYPH_WIDTH_EM = 0.60
LINE_HEIGHT_EM = 1.2
ASCENT_EM = 0.88
DESCENT_EM = 0.32

_SKIP_TAGS = {"defs", "metadata", "title", "desc", "clipPath", "marker",
              "pattern", "symbol", "style", "script", "filter", "linearGradient",
              "radialGradient", "mask"}

_INHERITED = ("fill", "stroke", "stroke-width", "font-size", "font-family",
              "text-anchor", "dominant-baseline")

_LENGTH_RE = re.compile(r"^\s*([-+]?[0-9.]+(?:[eE][-+]?\d+)?)\s*([a-z%]*)\s*$")


class MarkKind(enum.Enum):
    RECTANGLE = "rectangle"
    ELLIPSE = "ellipse"
    LINE = "line"
    POLYGON = "polygon"
    AREA = "area"
    TEXT = "text"


@dataclass
class Style:
    fill: str = "#000000"
    stroke: str = "none"
    stroke_width: float = 1.0
    opacity: float = 1.0
    font_size: float = 16.0
    font_family: str | None = None
    text_anchor: str = "start"
    dominant_baseline: str = "auto"
    css_class: str = ""

    def paint_key(self) -> tuple:
        """Fields that identify how a mark is painted, for style grouping."""
        return (self.fill, self.stroke, round(self.stroke_width, 3))


@dataclass
class Mark:
    index: int
    tag: str
    kind: MarkKind
    bbox: Rect
    style: Style
    element: ET.Element
    parent: ET.Element | None
    parent_transform: TransformMatrix
    own_transform: TransformMatrix
    vertices: list[tuple[float, float]] | None = None
    center: tuple[float, float] = (0.0, 0.0)
    radii: tuple[float, float] | None = None
    text: str | None = None
    anchor: tuple[float, float] | None = None
    clip_path: str | None = None

    @property
    def transform(self) -> TransformMatrix:
        return self.parent_transform @ self.own_transform

    def __repr__(self) -> str:  # keep test failures readable
        return "Mark(%d, %s, %s)" % (self.index, self.kind.value, self.text or self.tag)


@dataclass
class SvgDocument:
    root: ET.Element
    width: float
    height: float
    marks: list[Mark] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def viewport(self) -> Rect:
        return Rect(0.0, 0.0, self.width, self.height)


def local_name(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_length(value: str, *, what: str = "length") -> float:
    match = _LENGTH_RE.match(value)
    if not match:
        raise UnsupportedUnit("cannot parse %s %r" % (what, value))
    number, unit = float(match.group(1)), match.group(2)
    if unit in ("", "px"):
        return number
    if unit == "pt":
        return number * 4.0 / 3.0
    raise UnsupportedUnit("unsupported unit %r in %s %r" % (unit, what, value))


_HEX_SHORT_RE = re.compile(r"^#([0-9a-f])([0-9a-f])([0-9a-f])$")
_RGB_RE = re.compile(r"^rgba?\(([^)]*)\)$")


def normalize_color(value: str | None) -> str:
    """Canonicalize color spellings so string equality means same paint."""
    if value is None:
        return "none"
    text = value.strip().lower()
    if not text:
        return "none"
    short = _HEX_SHORT_RE.match(text)
    if short:
        return "#" + "".join(ch * 2 for ch in short.groups())
    rgb = _RGB_RE.match(text)
    if rgb:
        parts = [p.strip() for p in rgb.group(1).split(",")]
        channels = []
        for part in parts[:3]:
            if part.endswith("%"):
                channels.append(round(float(part[:-1]) * 255.0 / 100.0))
            else:
                channels.append(round(float(part)))
        return "#%02x%02x%02x" % tuple(max(0, min(255, ch)) for ch in channels)
    return text


def _parse_style_attr(text: str | None) -> dict[str, str]:
    out: dict[str, str] = {}
    if not text:
        return out
    for chunk in text.split(";"):
        if ":" not in chunk:
            continue
        key, value = chunk.split(":", 1)
        out[key.strip().lower()] = value.strip()
    return out


def _element_props(element: ET.Element) -> dict[str, str]:
    """Presentation attributes overridden by the inline style attribute."""
    props: dict[str, str] = {}
    for key in (*_INHERITED, "opacity"):
        if key in element.attrib:
            props[key] = element.attrib[key]
    props.update(_parse_style_attr(element.get("style")))
    return props


@dataclass
class _StyleContext:
    fill: str = "#000000"
    stroke: str = "none"
    stroke_width: float = 1.0
    opacity: float = 1.0
    font_size: float = 16.0
    font_family: str | None = None
    text_anchor: str = "start"
    dominant_baseline: str = "auto"

    def child(self, element: ET.Element) -> "_StyleContext":
        props = _element_props(element)
        ctx = _StyleContext(**self.__dict__)
        if "fill" in props:
            ctx.fill = normalize_color(props["fill"])
        if "stroke" in props:
            ctx.stroke = normalize_color(props["stroke"])
        if "stroke-width" in props:
            try:
                ctx.stroke_width = parse_length(props["stroke-width"], what="stroke-width")
            except UnsupportedUnit:
                pass
        if "font-size" in props:
            try:
                ctx.font_size = parse_length(props["font-size"], what="font-size")
            except UnsupportedUnit:
                pass
        if "font-family" in props:
            ctx.font_family = props["font-family"]
        if "text-anchor" in props:
            ctx.text_anchor = props["text-anchor"]
        if "dominant-baseline" in props:
            ctx.dominant_baseline = props["dominant-baseline"]
        if "opacity" in props:
            try:
                ctx.opacity = self.opacity * float(props["opacity"])
            except ValueError:
                pass
        return ctx

    def to_style(self, element: ET.Element) -> Style:
        return Style(
            fill=self.fill, stroke=self.stroke, stroke_width=self.stroke_width,
            opacity=self.opacity, font_size=self.font_size, font_family=self.font_family,
            text_anchor=self.text_anchor, dominant_baseline=self.dominant_baseline,
            css_class=element.get("class", ""),
        )


def estimate_text_extent(text: str, font_size: float, text_anchor: str,
                         dominant_baseline: str) -> Rect:
    """Estimated local-space bbox of a text anchored at the origin."""
    width = GLYPH_WIDTH_EM * font_size * len(text)
    if text_anchor == "middle":
        left = -width / 2.0
    elif text_anchor == "end":
        left = -width
    else:
        left = 0.0
    baseline = dominant_baseline
    if baseline in ("middle", "central"):
        top = -LINE_HEIGHT_EM * font_size / 2.0
    elif baseline in ("hanging", "text-before-edge"):
        top = 0.0
    elif baseline == "text-after-edge":
        top = -LINE_HEIGHT_EM * font_size
    else:  # alphabetic
        top = -ASCENT_EM * font_size
    return Rect(left, top, left + width, top + LINE_HEIGHT_EM * font_size)


def _classify_closed_ring(segments: list[Segment],
                          ring: list[tuple[float, float]]) -> MarkKind:
    commands = {seg.command for seg in segments if seg.command not in ("M", "Z")}
    if commands <= {"L"}:
        corners = _dedup_ring(ring)
        if len(corners) == 4 and _is_orthogonal_quad(corners):
            return MarkKind.RECTANGLE
        return MarkKind.POLYGON
    if "L" not in commands and _fits_ellipse(ring):
        return MarkKind.ELLIPSE
    return MarkKind.POLYGON


def _dedup_ring(ring: list[tuple[float, float]]) -> list[tuple[float, float]]:
    points: list[tuple[float, float]] = []
    for point in ring:
        if not points or _dist2(points[-1], point) > 1e-12:
            points.append(point)
    if len(points) > 1 and _dist2(points[0], points[-1]) <= 1e-12:
        points.pop()
    return points


def _dist2(p: tuple[float, float], q: tuple[float, float]) -> float:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _is_orthogonal_quad(corners: list[tuple[float, float]]) -> bool:
    xs = {round(p[0], 6) for p in corners}
    ys = {round(p[1], 6) for p in corners}
    if len(xs) != 2 or len(ys) != 2:
        return False
    for i in range(4):
        x0, y0 = corners[i]
        x1, y1 = corners[(i + 1) % 4]
        if abs(x0 - x1) > 1e-6 and abs(y0 - y1) > 1e-6:
            return False
    return True


def _fits_ellipse(ring: list[tuple[float, float]]) -> bool:
    box = Rect.from_points(ring)
    rx, ry = box.width / 2.0, box.height / 2.0
    if rx <= 0 or ry <= 0:
        return False
    cx, cy = box.center
    for x, y in ring:
        residual = ((x - cx) / rx) ** 2 + ((y - cy) / ry) ** 2 - 1.0
        if abs(residual) > 0.08:
            return False
    return True


def _transform_segments(segments: list[Segment], m: TransformMatrix) -> list[Segment]:
    if m.is_identity:
        return segments
    out: list[Segment] = []
    for seg in segments:
        if seg.command == "A":
            raise AssertionError("arcs must be converted to cubics before transforming")
        pts = seg.points
        mapped: list[float] = []
        for i in range(0, len(pts), 2):
            x, y = m.apply(pts[i], pts[i + 1])
            mapped.extend((x, y))
        out.append(Segment(seg.command, seg.source, tuple(mapped)))
    return out


def _arcs_to_cubics(segments: list[Segment]) -> list[Segment]:
    from .svgpath import arc_to_cubics

    out: list[Segment] = []
    cursor = (0.0, 0.0)
    for seg in segments:
        if seg.command == "A":
            for cubic in arc_to_cubics(cursor, seg):
                out.append(Segment("C", seg.source, cubic))
            cursor = seg.end
        else:
            out.append(seg)
            cursor = seg.end
    return out


class _Parser:
    def __init__(self) -> None:
        self.marks: list[Mark] = []
        self.diagnostics: list[Diagnostic] = []
        self.id_map: dict[str, ET.Element] = {}

    def run(self, root: ET.Element) -> None:
        for element in root.iter():
            ident = element.get("id")
            if ident:
                self.id_map[ident] = element
        ctx = _StyleContext()
        # fill/stroke on the root svg element inherit like a group
        ctx = ctx.child(root)
        for child in root:
            self._visit(child, TransformMatrix.identity(), ctx, root)

    def _visit(self, element: ET.Element, transform: TransformMatrix,
               ctx: _StyleContext, parent: ET.Element) -> None:
        tag = local_name(element.tag)
        if tag in _SKIP_TAGS:
            return
        if ANNOTATION_CLASS in element.get("class", ""):
            self.diagnostics.append(Diagnostic(
                "annotation-skipped", "ignored %s carrying %s" % (tag, ANNOTATION_CLASS)))
            return
        if tag in ("g", "svg", "a"):
            own = parse_transform(element.get("transform"))
            child_ctx = ctx.child(element)
            for child in element:
                self._visit(child, transform @ own, child_ctx, element)
            return
        if tag == "use":
            self._visit_use(element, transform, ctx, parent)
            return
        builder = getattr(self, "_build_" + tag, None)
        if builder is None:
            self.diagnostics.append(Diagnostic("element-skipped", "no handler for <%s>" % tag))
            return
        own = parse_transform(element.get("transform"))
        child_ctx = ctx.child(element)
        mark = builder(element, transform @ own, child_ctx)
        if mark is None:
            return
        mark.parent = parent
        mark.parent_transform = transform
        mark.own_transform = own
        mark.clip_path = element.get("clip-path")
        self.marks.append(mark)

    def _visit_use(self, element: ET.Element, transform: TransformMatrix,
                   ctx: _StyleContext, parent: ET.Element) -> None:
        href = element.get("href") or element.get("{%s}href" % XLINK_NS)
        if not href or not href.startswith("#"):
            self.diagnostics.append(Diagnostic("use-skipped", "use without local href"))
            return
        target = self.id_map.get(href[1:])
        if target is None:
            self.diagnostics.append(Diagnostic("use-skipped", "no element with id %r" % href[1:]))
            return
        target_tag = local_name(target.tag)
        if target_tag == "use":
            self.diagnostics.append(Diagnostic("use-skipped", "nested use %r not inlined" % href))
            return
        dx = parse_length(element.get("x", "0"), what="use x")
        dy = parse_length(element.get("y", "0"), what="use y")
        own = parse_transform(element.get("transform")) @ TransformMatrix.translate(dx, dy)
        # The inlined copy inherits the use element's style context; the
        # target's own properties win where set.
        child_ctx = ctx.child(element).child(target)
        builder = getattr(self, "_build_" + target_tag, None)
        if builder is None:
            self.diagnostics.append(Diagnostic("use-skipped", "no handler for target <%s>" % target_tag))
            return
        target_own = parse_transform(target.get("transform"))
        mark = builder(target, transform @ own @ target_own, child_ctx)
        if mark is None:
            return
        # Interaction edits go to the use element, not the shared def.
        mark.element = element
        mark.parent = parent
        mark.parent_transform = transform
        mark.own_transform = own @ target_own
        mark.clip_path = element.get("clip-path")
        self.marks.append(mark)

    # -- element builders ------------------------------------------------

    def _next_index(self) -> int:
        return len(self.marks)

    def _mark(self, element: ET.Element, kind: MarkKind, bbox: Rect, ctx: _StyleContext,
              **extra) -> Mark:
        return Mark(
            index=self._next_index(), tag=local_name(element.tag), kind=kind, bbox=bbox,
            style=ctx.to_style(element), element=element, parent=None,
            parent_transform=TransformMatrix.identity(),
            own_transform=TransformMatrix.identity(),
            center=bbox.center, **extra,
        )

    def _build_rect(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        x = parse_length(element.get("x", "0"), what="rect x")
        y = parse_length(element.get("y", "0"), what="rect y")
        w = parse_length(element.get("width", "0"), what="rect width")
        h = parse_length(element.get("height", "0"), what="rect height")
        corners = [m.apply(*p) for p in ((x, y), (x + w, y), (x + w, y + h), (x, y + h))]
        box = Rect.from_points(corners)
        if m.has_rotation:
            return self._mark(element, MarkKind.POLYGON, box, ctx, vertices=corners)
        return self._mark(element, MarkKind.RECTANGLE, box, ctx, vertices=corners)

    def _build_circle(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        r = parse_length(element.get("r", "0"), what="circle r")
        return self._ellipse_mark(element, m, ctx, r, r)

    def _build_ellipse(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        rx = parse_length(element.get("rx", "0"), what="ellipse rx")
        ry = parse_length(element.get("ry", "0"), what="ellipse ry")
        return self._ellipse_mark(element, m, ctx, rx, ry)

    def _ellipse_mark(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext,
                      rx: float, ry: float) -> Mark:
        cx = parse_length(element.get("cx", "0"), what="ellipse cx")
        cy = parse_length(element.get("cy", "0"), what="ellipse cy")
        center = m.apply(cx, cy)
        # Half-extents of an affinely mapped ellipse's axis-aligned bbox.
        hx = ((m.a * rx) ** 2 + (m.c * ry) ** 2) ** 0.5
        hy = ((m.b * rx) ** 2 + (m.d * ry) ** 2) ** 0.5
        box = Rect(center[0] - hx, center[1] - hy, center[0] + hx, center[1] + hy)
        return self._mark(element, MarkKind.ELLIPSE, box, ctx, radii=(hx, hy))

    def _build_line(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        pts = [
            m.apply(parse_length(element.get("x1", "0"), what="line x1"),
                    parse_length(element.get("y1", "0"), what="line y1")),
            m.apply(parse_length(element.get("x2", "0"), what="line x2"),
                    parse_length(element.get("y2", "0"), what="line y2")),
        ]
        return self._mark(element, MarkKind.LINE, Rect.from_points(pts), ctx, vertices=pts)

    def _points_attr(self, element: ET.Element, m: TransformMatrix) -> list[tuple[float, float]]:
        from .geom import NUMBER_RE

        numbers = [float(t) for t in NUMBER_RE.findall(element.get("points", ""))]
        pairs = [(numbers[i], numbers[i + 1]) for i in range(0, len(numbers) - 1, 2)]
        return [m.apply(*p) for p in pairs]

    def _build_polyline(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        pts = self._points_attr(element, m)
        if len(pts) < 2:
            return None
        return self._mark(element, MarkKind.LINE, Rect.from_points(pts), ctx, vertices=pts)

    def _build_polygon(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        pts = self._points_attr(element, m)
        if len(pts) < 3:
            return None
        return self._mark(element, MarkKind.POLYGON, Rect.from_points(pts), ctx, vertices=pts)

    def _build_path(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        d = element.get("d", "")
        segments = parse_path(d)
        if not segments:
            return None
        segments = _transform_segments(_arcs_to_cubics(segments), m)
        subpaths = flatten_path(segments, FLATTEN_TOLERANCE)
        if not subpaths or not any(len(sp) > 1 for sp in subpaths):
            return None
        all_points = [p for sp in subpaths for p in sp]
        box = Rect.from_points(all_points)
        if len(subpaths) > 1:
            self.diagnostics.append(Diagnostic(
                "multi-subpath", "path with %d subpaths classified by its first" % len(subpaths)))
        first = subpaths[0]
        closed = (segments[-1].command == "Z") or _dist2(first[0], first[-1]) <= 1e-12
        if closed:
            kind = _classify_closed_ring(segments, first)
        else:
            kind = MarkKind.LINE
        vertices = _dedup_ring(first) if closed else list(first)
        mark = self._mark(element, kind, box, ctx, vertices=vertices)
        if kind == MarkKind.ELLIPSE:
            mark.radii = (box.width / 2.0, box.height / 2.0)
        return mark

    def _build_text(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        content = "".join(element.itertext()).strip()
        if not content:
            return None
        x = parse_length(element.get("x", "0"), what="text x")
        y = parse_length(element.get("y", "0"), what="text y")
        local = estimate_text_extent(content, ctx.font_size, ctx.text_anchor,
                                     ctx.dominant_baseline)
        shifted = Rect(local.left + x, local.top + y, local.right + x, local.bottom + y)
        box = shifted.transformed(m)
        mark = self._mark(element, MarkKind.TEXT, box, ctx)
        mark.text = content
        mark.anchor = m.apply(x, y)
        return mark

    def _build_image(self, element: ET.Element, m: TransformMatrix, ctx: _StyleContext) -> Mark | None:
        self.diagnostics.append(Diagnostic("element-skipped", "image elements are not chart marks"))
        return None


def parse_svg(data: str | bytes) -> SvgDocument:
    """Parse SVG markup into a document of resolved marks."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.parse(io.BytesIO(data)).getroot()
    except ET.ParseError as exc:
        line, column = exc.position
        offset = _byte_offset(data, line, column)
        raise MalformedXml("not well-formed XML at byte %d (line %d, column %d)"
                           % (offset, line, column), offset) from exc
    if local_name(root.tag) != "svg":
        raise MalformedXml("root element is <%s>, expected <svg>" % local_name(root.tag))

    width, height = _viewport_size(root)
    parser = _Parser()
    parser.run(root)
    return SvgDocument(root=root, width=width, height=height,
                       marks=parser.marks, diagnostics=parser.diagnostics)


def parse_svg_file(path) -> SvgDocument:
    with open(path, "rb") as handle:
        return parse_svg(handle.read())


def _byte_offset(data: bytes, line: int, column: int) -> int:
    lines = data.split(b"\n")
    return sum(len(l) + 1 for l in lines[:line - 1]) + column


def _viewport_size(root: ET.Element) -> tuple[float, float]:
    viewbox = root.get("viewBox")
    if viewbox:
        from .geom import NUMBER_RE

        numbers = [float(t) for t in NUMBER_RE.findall(viewbox)]
        if len(numbers) == 4:
            return numbers[2], numbers[3]
    width, height = root.get("width"), root.get("height")
    if width is None or height is None:
        raise MalformedXml("svg element has no resolvable size (width/height or viewBox)")
    return (parse_length(width, what="svg width"), parse_length(height, what="svg height"))


def write_svg(doc: SvgDocument) -> bytes:
    """Serialize the (possibly edited) document deterministically."""
    body = ET.tostring(doc.root, encoding="unicode")
    return ('<?xml version="1.0" encoding="utf-8"?>\n' + body + "\n").encode("utf-8")
