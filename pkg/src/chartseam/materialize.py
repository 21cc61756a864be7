"""Materialize interaction state back into the SVG document.

Every rematerialization starts from a pristine snapshot of the parsed tree,
so applying a step never accumulates edits: state is declarative and the
output for a given state is byte-stable.  Overlay marks we add carry the
annotation class so a later parse of the emitted file ignores them.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .diagnostics import Diagnostic
from .geom import Rect, TransformMatrix
from .query import ViewTransform
from .svgdoc import ANNOTATION_CLASS, Mark

NAV_CLIP_PREFIX = "chartseam-nav-clip"

# Attribute values are formatted with %g so identical state always
# serializes to identical bytes.


def _fmt(value: float) -> str:
    return format(value, "g")


def snapshot_document(doc) -> dict:
    """Record every element's attributes and text for later restoration."""
    snap = {}
    for elem in doc.root.iter():
        snap[elem] = (dict(elem.attrib), elem.text, elem.tail)
    return snap


def restore_document(doc, snapshot: dict) -> None:
    _strip_annotations(doc.root)
    for elem in doc.root.iter():
        saved = snapshot.get(elem)
        if saved is None:
            continue
        attrs, text, tail = saved
        elem.attrib.clear()
        elem.attrib.update(attrs)
        elem.text = text
        elem.tail = tail


def _strip_annotations(root: ET.Element) -> None:
    doomed: list[tuple[ET.Element, ET.Element]] = []
    for parent in root.iter():
        for child in list(parent):
            if ANNOTATION_CLASS in (child.get("class") or ""):
                doomed.append((parent, child))
    for parent, child in doomed:
        parent.remove(child)


def _nav_matrix(view: ViewTransform) -> TransformMatrix:
    return TransformMatrix(view.k, 0.0, 0.0, view.k, view.tx, view.ty)


def _mark_attr_transform(mark: Mark, root_space: TransformMatrix) -> TransformMatrix:
    # transform attribute maps local to parent space; compose the root-space
    # edit around the existing parent and own transforms
    return (mark.parent_transform.inverse() @ root_space
            @ mark.parent_transform @ mark.own_transform)


def _axis_rect(rect: Rect) -> dict[str, str]:
    return {"x": _fmt(rect.left), "y": _fmt(rect.top),
            "width": _fmt(rect.width), "height": _fmt(rect.height)}


class _Materializer:
    def __init__(self, chart, dim_opacity: float):
        self.chart = chart
        self.md = chart.md
        self.inferred = chart.inferred
        self.doc = chart.doc
        self.dim = dim_opacity
        # root-space translation applied to each mark by the sort pass
        self.sort_delta: dict[int, tuple[float, float]] = {}

    def run(self) -> None:
        restore_document(self.doc, self.chart.snapshot)
        if self.chart.order is not None:
            self._apply_sort()
        if not self.chart.transform.is_identity:
            self._apply_navigate()
        self._apply_visibility()
        if self.chart.selection is not None and self.chart.overlay is not None:
            self._draw_overlays()
        elif self.chart.overlay is not None:
            self._note_partial_groups()

    # -- helpers ---------------------------------------------------------

    def _marks_by_index(self) -> dict[int, Mark]:
        return {m.index: m for m in self.doc.marks}

    def _mark_rows(self, mark: Mark) -> list[int]:
        return self.inferred.mark_rows.get(mark.index, [])

    def _value_axis(self):
        vertical = (self.md.view.orientation or "vertical") == "vertical"
        return self.md.y_axis if vertical else self.md.x_axis

    def _category_axis(self):
        vertical = (self.md.view.orientation or "vertical") == "vertical"
        return self.md.x_axis if vertical else self.md.y_axis

    def _set_root_transform(self, mark: Mark, root_space: TransformMatrix,
                            extra: dict[str, str] | None = None) -> None:
        attr = _mark_attr_transform(mark, root_space)
        if attr.is_identity:
            if "transform" in mark.element.attrib:
                del mark.element.attrib["transform"]
        else:
            mark.element.set("transform", attr.to_svg())
        for key, value in (extra or {}).items():
            mark.element.set(key, value)

    # -- sort --------------------------------------------------------

    def _apply_sort(self) -> None:
        view = self.md.view
        order = self.chart.order
        cat_axis = self._category_axis()
        if cat_axis is None or not view.slot_positions:
            self.doc.diagnostics.append(Diagnostic(
                "sort-skipped", "chart has no categorical slots to reorder"))
            return
        vertical = (view.orientation or "vertical") == "vertical"
        cat_role = "x" if vertical else "y"
        cat_field = self.inferred.field_for_role(cat_role)
        if cat_field is None:
            return
        col = self.inferred.table.field_index(cat_field)
        rows = self.inferred.table.rows

        slots = sorted(view.slot_positions)
        seen: list[object] = []
        for row in order:
            value = rows[row][col]
            if value not in seen:
                seen.append(value)
        if len(seen) > len(slots):
            self.doc.diagnostics.append(Diagnostic(
                "sort-skipped", "more categories than slots"))
            return
        new_slot = {value: slots[i] for i, value in enumerate(seen)}

        def current_slot(position: float) -> float:
            return min(slots, key=lambda s: abs(s - position))

        marks = self._marks_by_index()
        for mark_index, mark_rows in self.inferred.mark_rows.items():
            mark = marks.get(mark_index)
            if mark is None or not mark_rows:
                continue
            value = rows[mark_rows[0]][col]
            if value not in new_slot:
                continue
            axis_pos = mark.bbox.center_x if vertical else mark.bbox.center_y
            delta = new_slot[value] - current_slot(axis_pos)
            if abs(delta) < 1e-9:
                continue
            shift = (delta, 0.0) if vertical else (0.0, delta)
            self.sort_delta[mark_index] = shift
            self._set_root_transform(mark, TransformMatrix.translate(*shift))

        # tick labels travel with their category; tick lines stay put
        label_of = {}
        for tick in cat_axis.ticks:
            label_of[tick.label] = tick
        for value, slot in new_slot.items():
            tick = label_of.get(self._category_label(value))
            if tick is None:
                continue
            delta = slot - tick.position
            if abs(delta) < 1e-9:
                continue
            shift = (delta, 0.0) if vertical else (0.0, delta)
            self._set_root_transform(tick.text_mark, TransformMatrix.translate(*shift))

    def _category_label(self, value: object) -> str:
        if isinstance(value, str):
            return value
        if isinstance(value, float) and value == int(value):
            return str(int(value))
        return str(value)

    # -- navigate ------------------------------------------------------

    def _apply_navigate(self) -> None:
        nav = _nav_matrix(self.chart.transform)
        clip = self.md.view.view_clip
        clip_ids: dict[tuple, str] = {}
        defs: ET.Element | None = None

        for mark in self.md.view.data_marks:
            shift = self.sort_delta.get(mark.index, (0.0, 0.0))
            root_space = nav @ TransformMatrix.translate(*shift)
            total = root_space @ mark.parent_transform @ mark.own_transform
            self._set_root_transform(
                mark, root_space, extra={"vector-effect": "non-scaling-stroke"})

            if total.has_rotation:
                self.doc.diagnostics.append(Diagnostic(
                    "clip-skipped", "rotated mark %d left unclipped" % mark.index))
                continue
            local_clip = clip.transformed(total.inverse())
            key = (round(local_clip.left, 6), round(local_clip.top, 6),
                   round(local_clip.right, 6), round(local_clip.bottom, 6))
            clip_id = clip_ids.get(key)
            if clip_id is None:
                if defs is None:
                    defs = ET.SubElement(self.doc.root, "defs",
                                         {"class": ANNOTATION_CLASS})
                    defs.text = "\n"
                    defs.tail = "\n"
                clip_id = "%s-%d" % (NAV_CLIP_PREFIX, len(clip_ids))
                clip_ids[key] = clip_id
                holder = ET.SubElement(defs, "clipPath", {"id": clip_id})
                holder.tail = "\n"
                rect = ET.SubElement(holder, "rect", _axis_rect(local_clip))
                rect.tail = "\n"
            mark.element.set("clip-path", "url(#%s)" % clip_id)

    # -- visibility ------------------------------------------------------

    def _apply_visibility(self) -> None:
        hidden = self.chart.hidden
        selection = self.chart.selection
        selected = set(selection) if selection is not None else None
        overlay_active = selection is not None and self.chart.overlay is not None

        for mark in self.md.view.data_marks:
            rows = self._mark_rows(mark)
            if rows and all(r in hidden for r in rows):
                mark.element.set("opacity", "0")
            elif overlay_active:
                mark.element.set("opacity", _fmt(self.dim))
            elif selected is not None and rows and not (set(rows) & selected):
                mark.element.set("opacity", _fmt(self.dim))

        self._apply_legend_visibility(selected)

    def _legend_rows(self, legend, label: str) -> list[int]:
        field = None
        if legend.type in ("color", "shape"):
            field = self.inferred.field_for_role("color")
        elif legend.type == "size":
            field = self.inferred.field_for_role("size")
        if field is None or not self.inferred.table.has_field(field):
            return []
        col = self.inferred.table.field_index(field)
        out = []
        for i, row in enumerate(self.inferred.table.rows):
            if self._category_label(row[col]) == label:
                out.append(i)
        return out

    def _apply_legend_visibility(self, selected: set[int] | None) -> None:
        for legend in self.md.legends:
            for entry in legend.entries:
                rows = self._legend_rows(legend, entry.label)
                if not rows:
                    continue
                live = [r for r in rows if r not in self.chart.hidden]
                if not live:
                    for mark in (entry.symbol, entry.text_mark):
                        mark.element.set("opacity", "0")
                elif selected is not None and not (set(live) & selected):
                    for mark in (entry.symbol, entry.text_mark):
                        mark.element.set("opacity", _fmt(self.dim))

    # -- overlays ---------------------------------------------------------

    def _overlay_geometry(self, target_rows: list[int], value: float) -> Rect | None:
        marks = self._marks_by_index()
        group = [marks[i] for r in target_rows
                 for i in self.inferred.row_marks[r] if i in marks]
        if not group:
            return None
        view = self.md.view
        value_axis = self._value_axis()
        if value_axis is None or view.baseline is None:
            return None
        vertical = (view.orientation or "vertical") == "vertical"
        base_value = value_axis.scale.invert(view.baseline)
        if not isinstance(base_value, (int, float)):
            return None
        far = value_axis.scale.apply(base_value + value)
        near = view.baseline
        if vertical:
            left = min(m.bbox.left for m in group)
            right = max(m.bbox.right for m in group)
            return Rect(left, min(near, far), right, max(near, far))
        top = min(m.bbox.top for m in group)
        bottom = max(m.bbox.bottom for m in group)
        return Rect(min(near, far), top, max(near, far), bottom)

    def _groups(self) -> dict[int, list[int]]:
        # overlay_rows maps target row -> overlay rows; invert to draw one
        # annotation per overlay group
        groups: dict[int, list[int]] = {}
        for target_row, overlay_rows in self.chart.overlay_rows.items():
            for oi in overlay_rows:
                groups.setdefault(oi, []).append(target_row)
        return {oi: sorted(rows) for oi, rows in groups.items()}

    def _draw_overlays(self) -> None:
        overlay = self.chart.overlay
        value_col = overlay.table.field_index(overlay.value_field)
        marks = self._marks_by_index()
        nav = (None if self.chart.transform.is_identity
               else _nav_matrix(self.chart.transform))

        for result_row, target_rows in sorted(self._groups().items()):
            value = overlay.table.rows[result_row][value_col]
            if not isinstance(value, (int, float)):
                continue
            box = self._overlay_geometry(target_rows, float(value))
            if box is None:
                continue
            first_mark = None
            for r in target_rows:
                for i in self.inferred.row_marks[r]:
                    if i in marks:
                        first_mark = marks[i]
                        break
                if first_mark:
                    break
            fill = first_mark.style.fill if first_mark else "#333333"
            attrs = dict(_axis_rect(box))
            attrs["class"] = ANNOTATION_CLASS
            attrs["fill"] = fill if fill and fill != "none" else "#333333"
            attrs["stroke"] = "#333333"
            attrs["stroke-width"] = "1"
            root_space = TransformMatrix.identity()
            if first_mark is not None and first_mark.index in self.sort_delta:
                root_space = TransformMatrix.translate(
                    *self.sort_delta[first_mark.index]) @ root_space
            if nav is not None:
                root_space = nav @ root_space
            if not root_space.is_identity:
                attrs["transform"] = root_space.to_svg()
            rect = ET.SubElement(self.doc.root, "rect", attrs)
            rect.tail = "\n"

    def _note_partial_groups(self) -> None:
        # a filter upstream of an aggregation leaves groups whose drawn value
        # no longer matches the remaining rows; flag them instead of redrawing
        overlay = self.chart.overlay
        value_col = overlay.table.field_index(overlay.value_field)
        vertical = (self.md.view.orientation or "vertical") == "vertical"
        value_field = self.inferred.field_for_role("y" if vertical else "x")
        if value_field is None or not self.inferred.table.has_field(value_field):
            return
        drawn_col = self.inferred.table.field_index(value_field)
        for result_row, target_rows in sorted(self._groups().items()):
            value = overlay.table.rows[result_row][value_col]
            for target_row in target_rows:
                if target_row in self.chart.hidden:
                    continue
                drawn = self.inferred.table.rows[target_row][drawn_col]
                if not isinstance(drawn, (int, float)) or not isinstance(value, (int, float)):
                    continue
                scale = max(abs(drawn), abs(value), 1.0)
                if abs(drawn - value) > 1e-9 * scale:
                    self.doc.diagnostics.append(Diagnostic(
                        "partial-aggregate",
                        "row %d shows %s but remaining rows give %s"
                        % (target_row, _fmt(drawn), _fmt(float(value)))))


def apply_chart_state(chart, dim_opacity: float = 0.2) -> None:
    """Rebuild the chart's DOM from its snapshot plus interaction state."""
    _Materializer(chart, dim_opacity).run()
