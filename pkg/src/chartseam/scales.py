"""Scales mapping data values to pixel positions, inferred from axis ticks.

The domain comes from the extreme tick values and the range from the extreme
tick pixel positions.  Numeric ticks whose values are non-linearly spaced
against their positions, but linear in log space, yield a log scale.  An
axis with no usable ticks falls back to the identity scale so positions pass
through as raw pixels.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta

from .errors import ScaleError

EPOCH = datetime(1970, 1, 1)

# Relative residual allowed when testing ticks for linear/log spacing.
SPACING_RTOL = 1e-3


def to_epoch_ms(value: datetime) -> float:
    return (value - EPOCH).total_seconds() * 1000.0


def from_epoch_ms(ms: float) -> datetime:
    return EPOCH + timedelta(milliseconds=ms)


_NUMBER_CLEAN_RE = re.compile(r"^[\s$€£¥]*([-+]?[0-9][0-9,]*\.?[0-9]*(?:[eE][-+]?\d+)?)\s*%?\s*$")

_MONTHS = {name.lower(): i + 1 for i, name in enumerate(
    ("Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"))}
_MONTHS.update({name.lower(): i + 1 for i, name in enumerate(
    ("January", "February", "March", "April", "May", "June", "July",
     "August", "September", "October", "November", "December"))})

_DATE_FORMATS = (
    "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d %H:%M:%S", "%Y-%m-%dT%H:%M",
    "%Y-%m-%d", "%Y/%m/%d", "%m/%d/%Y", "%Y-%m",
    "%d %b %Y", "%b %d, %Y", "%b %d %Y", "%b %Y", "%B %Y",
)

_MONTH_DAY_RE = re.compile(r"^([A-Za-z]+)\s+(\d{1,2})$")


def parse_tick_label(text: str):
    """Interpret one tick label.

    Returns ("number", float), ("date", datetime) or ("text", str).  Bare
    numbers are always numeric, never years; dates need date-like syntax.
    """
    cleaned = text.strip().replace("−", "-")
    match = _NUMBER_CLEAN_RE.match(cleaned)
    if match:
        return ("number", float(match.group(1).replace(",", "")))
    if any(ch.isdigit() for ch in cleaned):
        for fmt in _DATE_FORMATS:
            try:
                return ("date", datetime.strptime(cleaned, fmt))
            except ValueError:
                continue
        month_day = _MONTH_DAY_RE.match(cleaned)
        if month_day and month_day.group(1).lower() in _MONTHS:
            return ("date", datetime(1900, _MONTHS[month_day.group(1).lower()],
                                     int(month_day.group(2))))
    return ("text", text.strip())


class Scale:
    kind = "identity"

    def apply(self, value) -> float:
        raise NotImplementedError

    def invert(self, px: float):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass
class IdentityScale(Scale):
    kind = "identity"

    def apply(self, value) -> float:
        return float(value)

    def invert(self, px: float) -> float:
        return float(px)

    def to_json(self) -> dict:
        return {"kind": "identity"}


@dataclass
class LinearScale(Scale):
    domain: tuple[float, float]
    range: tuple[float, float]
    kind = "linear"

    def __post_init__(self):
        if self.domain[0] == self.domain[1]:
            raise ScaleError("degenerate linear domain %r" % (self.domain,))
        if self.range[0] == self.range[1]:
            raise ScaleError("degenerate linear range %r" % (self.range,))

    def apply(self, value) -> float:
        d0, d1 = self.domain
        r0, r1 = self.range
        return r0 + (float(value) - d0) / (d1 - d0) * (r1 - r0)

    def invert(self, px: float) -> float:
        d0, d1 = self.domain
        r0, r1 = self.range
        return d0 + (px - r0) / (r1 - r0) * (d1 - d0)

    def to_json(self) -> dict:
        return {"kind": "linear", "domain": list(self.domain), "range": list(self.range)}


@dataclass
class LogScale(Scale):
    domain: tuple[float, float]
    range: tuple[float, float]
    base: float = 10.0
    kind = "log"

    def __post_init__(self):
        if min(self.domain) <= 0:
            raise ScaleError("log domain must be positive, got %r" % (self.domain,))

    def apply(self, value) -> float:
        value = float(value)
        if value <= 0:
            raise ScaleError("cannot place non-positive value %r on a log scale" % value)
        d0, d1 = self.domain
        r0, r1 = self.range
        return r0 + (math.log(value) - math.log(d0)) / (math.log(d1) - math.log(d0)) * (r1 - r0)

    def invert(self, px: float) -> float:
        d0, d1 = self.domain
        r0, r1 = self.range
        return math.exp(math.log(d0) + (px - r0) / (r1 - r0) * (math.log(d1) - math.log(d0)))

    def to_json(self) -> dict:
        return {"kind": "log", "domain": list(self.domain), "range": list(self.range),
                "base": self.base}


@dataclass
class DateScale(Scale):
    domain: tuple[datetime, datetime]
    range: tuple[float, float]
    kind = "date"

    def apply(self, value) -> float:
        ms = to_epoch_ms(value) if isinstance(value, datetime) else float(value)
        d0, d1 = to_epoch_ms(self.domain[0]), to_epoch_ms(self.domain[1])
        r0, r1 = self.range
        return r0 + (ms - d0) / (d1 - d0) * (r1 - r0)

    def invert(self, px: float) -> datetime:
        d0, d1 = to_epoch_ms(self.domain[0]), to_epoch_ms(self.domain[1])
        r0, r1 = self.range
        return from_epoch_ms(d0 + (px - r0) / (r1 - r0) * (d1 - d0))

    def to_json(self) -> dict:
        return {"kind": "date", "domain": [d.isoformat() for d in self.domain],
                "range": list(self.range)}


@dataclass
class CategoricalScale(Scale):
    labels: list[str]
    positions: list[float]
    kind = "categorical"
    _order: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._order = {label: i for i, label in enumerate(self.labels)}

    def apply(self, value) -> float:
        if value not in self._order:
            raise ScaleError("unknown category %r" % (value,))
        return self.positions[self._order[value]]

    def invert(self, px: float) -> str:
        best = min(range(len(self.positions)), key=lambda i: (abs(self.positions[i] - px), i))
        return self.labels[best]

    def order_of(self, label: str) -> int:
        if label not in self._order:
            raise ScaleError("unknown category %r" % (label,))
        return self._order[label]

    def to_json(self) -> dict:
        return {"kind": "categorical", "labels": list(self.labels),
                "positions": list(self.positions)}


def _max_residual(values: list[float], positions: list[float]) -> float:
    """Largest deviation of (position, value) pairs from the endpoint line,
    relative to the value span."""
    v0, v1 = values[0], values[-1]
    p0, p1 = positions[0], positions[-1]
    span = abs(v1 - v0)
    if span == 0 or p0 == p1:
        return float("inf")
    worst = 0.0
    for value, pos in zip(values, positions):
        predicted = v0 + (pos - p0) / (p1 - p0) * (v1 - v0)
        worst = max(worst, abs(value - predicted) / span)
    return worst


def infer_scale(labels: list[str], positions: list[float], diagnostics=None) -> Scale:
    """Choose a scale for tick labels already sorted by pixel position."""
    from .diagnostics import Diagnostic

    if len(labels) < 2:
        return IdentityScale()
    parsed = [parse_tick_label(label) for label in labels]
    kinds = {kind for kind, _ in parsed}
    stripped = [label.strip() for label in labels]
    if kinds == {"number"}:
        values = [v for _, v in parsed]
        if values[0] == values[-1]:
            return CategoricalScale(stripped, list(positions))
        if _max_residual(values, positions) <= SPACING_RTOL:
            return LinearScale((values[0], values[-1]), (positions[0], positions[-1]))
        if all(v > 0 for v in values):
            logs = [math.log(v) for v in values]
            if _max_residual(logs, positions) <= SPACING_RTOL:
                ratio = values[1] / values[0]
                return LogScale((values[0], values[-1]), (positions[0], positions[-1]),
                                base=ratio if ratio > 1 else 10.0)
        if diagnostics is not None:
            diagnostics.append(Diagnostic(
                "nonlinear-ticks",
                "tick values fit neither linear nor log spacing; assuming linear",
                {"values": values}))
        return LinearScale((values[0], values[-1]), (positions[0], positions[-1]))
    if kinds == {"date"}:
        values = [v for _, v in parsed]
        if values[0] == values[-1]:
            return CategoricalScale(stripped, list(positions))
        return DateScale((values[0], values[-1]), (positions[0], positions[-1]))
    return CategoricalScale(stripped, list(positions))
