from __future__ import annotations

import pytest

from chartseam.errors import MalformedXml
from chartseam.svgdoc import (ANNOTATION_CLASS, MarkKind, parse_svg,
                              write_svg)

SVG = '<svg xmlns="http://www.w3.org/2000/svg" width="100" height="100">%s</svg>'


def marks_of(body: str):
    return parse_svg(SVG % body).marks


def test_rect_mark_bbox():
    (mark,) = marks_of('<rect x="1" y="2" width="3" height="4"/>')
    assert mark.kind == MarkKind.RECTANGLE
    assert (mark.bbox.left, mark.bbox.right) == (1.0, 4.0)
    assert (mark.bbox.top, mark.bbox.bottom) == (2.0, 6.0)


def test_group_transform_composes():
    (mark,) = marks_of('<g transform="translate(50,10)"><circle cx="0" cy="0" r="5"/></g>')
    assert mark.kind == MarkKind.ELLIPSE
    assert (mark.bbox.left, mark.bbox.right) == (45.0, 55.0)
    assert (mark.bbox.top, mark.bbox.bottom) == (5.0, 15.0)
    assert mark.center == (50.0, 10.0)


def test_nested_group_transforms():
    (mark,) = marks_of(
        '<g transform="translate(10,0)"><g transform="scale(2)">'
        '<rect x="1" y="1" width="2" height="2"/></g></g>')
    assert (mark.bbox.left, mark.bbox.top) == (12.0, 2.0)
    assert (mark.bbox.right, mark.bbox.bottom) == (16.0, 6.0)


def test_closed_path_classifies_polygon():
    (mark,) = marks_of('<path d="M0 0 L10 0 L10 10 L0 10 Z" fill="red"/>')
    assert mark.kind == MarkKind.RECTANGLE  # orthogonal 4-corner ring
    (mark,) = marks_of('<path d="M0 0 L10 0 L5 10 Z" fill="red"/>')
    assert mark.kind == MarkKind.POLYGON


def test_open_path_classifies_line():
    (mark,) = marks_of('<path d="M0 0 L10 10 L20 0" fill="none" stroke="black"/>')
    assert mark.kind == MarkKind.LINE
    assert mark.vertices and len(mark.vertices) == 3


def test_circle_path_classifies_ellipse():
    d = ("M10 0 A10 10 0 0 1 0 10 A10 10 0 0 1 -10 0 "
         "A10 10 0 0 1 0 -10 A10 10 0 0 1 10 0 Z")
    (mark,) = marks_of('<path d="%s"/>' % d)
    assert mark.kind == MarkKind.ELLIPSE


def test_use_inlines_target_geometry():
    body = ('<defs><circle id="dot" r="3"/></defs>'
            '<use href="#dot" x="20" y="30"/>')
    (mark,) = marks_of(body)
    assert mark.kind == MarkKind.ELLIPSE
    assert mark.center == (20.0, 30.0)
    # edits must land on the use element, not the shared definition
    assert mark.element.tag.endswith("use")


def test_annotation_class_skipped():
    body = ('<rect x="0" y="0" width="5" height="5"/>'
            '<rect class="%s" x="1" y="1" width="2" height="2"/>' % ANNOTATION_CLASS)
    doc = parse_svg(SVG % body)
    assert len(doc.marks) == 1
    assert any(d.code == "annotation-skipped" for d in doc.diagnostics)


def test_unknown_element_diagnostic_not_error():
    doc = parse_svg(SVG % "<foreignObject/><rect width='2' height='2'/>")
    assert len(doc.marks) == 1
    assert any(d.code == "element-skipped" for d in doc.diagnostics)


def test_malformed_xml_names_byte_offset():
    with pytest.raises(MalformedXml) as err:
        parse_svg("<svg><rect")
    assert "byte" in str(err.value)
    assert err.value.offset is not None


def test_non_svg_root_rejected():
    with pytest.raises(MalformedXml):
        parse_svg("<html></html>")


def test_viewbox_supplies_size():
    doc = parse_svg('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 640 480"/>')
    assert (doc.width, doc.height) == (640.0, 480.0)


def test_parse_is_deterministic():
    body = SVG % ('<g transform="translate(3,4)"><rect width="5" height="6"/>'
                  '<path d="M0 0 C0 10 10 10 10 0" stroke="blue" fill="none"/></g>')
    a = parse_svg(body)
    b = parse_svg(body)
    assert [(m.index, m.kind, m.bbox) for m in a.marks] == \
           [(m.index, m.kind, m.bbox) for m in b.marks]
    assert write_svg(a) == write_svg(b)


def test_write_reparse_stable():
    body = SVG % '<rect x="1" y="2" width="3" height="4" fill="#aabbcc"/>'
    doc = parse_svg(body)
    once = write_svg(doc)
    again = write_svg(parse_svg(once))
    assert once == again


def test_style_attribute_and_inheritance():
    body = ('<g fill="red" style="stroke: #00F">'
            '<rect width="4" height="4" style="fill:green"/></g>')
    (mark,) = marks_of(body)
    assert mark.style.fill == "green"  # own style wins over inherited fill
    assert mark.style.stroke == "#0000ff"  # short hex canonicalized


def test_opacity_zero_marks_still_parsed():
    (mark,) = marks_of('<rect width="4" height="4" opacity="0"/>')
    assert mark.style.opacity == 0.0
