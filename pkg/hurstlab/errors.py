"""User-facing exceptions for hurstlab.

Every failure a caller can act on is raised as a HurstLabError subclass
carrying a short hint, so the CLI can print what went wrong and what to
change instead of a numpy traceback.
"""

from __future__ import annotations


class HurstLabError(Exception):
    """Base class for all hurstlab errors."""

    def __init__(self, message: str, *, hint: str = "") -> None:
        self.hint = hint
        super().__init__(message)


class DomainError(HurstLabError):
    """A value lies outside the mathematical domain of an operation."""


class ConfigurationError(HurstLabError):
    """Box sizes, windows, degrees or manifest fields are inconsistent."""


class EstimationError(HurstLabError):
    """The series does not support a scaling fit (too short, too few points)."""


class IngestionError(HurstLabError):
    """A price file could not be read or failed validation."""

