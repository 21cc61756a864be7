"""Structured diagnostics emitted by inference stages.

Inference never fails silently: pruned candidates, skipped elements, and
best-effort fallbacks are recorded so a caller can audit why the pipeline
reached its answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Diagnostic:
    code: str
    message: str
    context: dict = field(default_factory=dict)

    def __str__(self) -> str:
        return "%s: %s" % (self.code, self.message)
