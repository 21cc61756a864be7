"""Exception types raised across the chartseam pipeline."""

from __future__ import annotations


class ChartSeamError(Exception):
    """Base class for all chartseam errors."""


class MalformedXml(ChartSeamError):
    """Input is not well-formed XML.  The message names the byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class UnsupportedUnit(ChartSeamError):
    """A length uses units we cannot resolve to pixels (em, %, ...)."""


class MalformedPath(ChartSeamError):
    """A path `d` attribute could not be tokenized."""


class ScaleError(ChartSeamError):
    """A scale was applied or inverted outside its valid domain."""


class NonOrderableField(ChartSeamError):
    """ORDERBY was requested on a field without a defined order."""


class UnknownField(ChartSeamError):
    """A predicate or spec referenced a field the table does not have."""


class CycleDetected(ChartSeamError):
    """The link graph contains a dependency cycle."""


class ReplayError(ChartSeamError):
    """An interaction script step could not be applied."""
