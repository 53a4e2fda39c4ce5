"""Exception types shared across the package."""

from __future__ import annotations


class SkyfilterError(Exception):
    """Base class for all skyfilter errors."""


class ParseError(SkyfilterError):
    """A catalog or config file is malformed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SchemaError(SkyfilterError):
    """A record does not conform to the catalog schema (missing/extra
    dimension, non-finite value, wrong field type)."""


class DuplicateIdError(SkyfilterError):
    """Two catalog records share the same id."""


class UnknownAttributeError(SkyfilterError):
    """A predicate references a fixed attribute the catalog does not declare."""


class MissingDimensionError(SkyfilterError):
    """A service or schema lacks a dimension required by the current view."""


class ZeroWeightError(SkyfilterError):
    """All criterion weights are zero; concordance is undefined."""


class QueryValidationError(SkyfilterError):
    """A query violates its structural invariants. `field` is the JSON path
    of the offending entry (e.g. "optimize[1].dim")."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
