"""Exception hierarchy shared by the library and the CLI.

The CLI maps each class to an exit code (see ``fanlemma.cli``).
"""

from __future__ import annotations


class FanLemmaError(Exception):
    """Base class for all library errors."""


class ValidationError(FanLemmaError):
    """A complex, flag or labeling failed structural validation."""

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = list(violations or [])


class HypothesisError(FanLemmaError):
    """An instance violates the hypotheses of the requested solver mode."""

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = list(violations or [])


class StructuralAnomaly(FanLemmaError):
    """The walk hit a state that a valid instance can never produce.

    ``trace`` carries the partial walk when one exists.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class LabelingError(FanLemmaError):
    """Labeling construction failed (degenerate sample, retry cap, ...)."""
