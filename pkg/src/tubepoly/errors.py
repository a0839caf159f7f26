"""Shared exception types."""
from __future__ import annotations


class PreconditionError(ValueError):
    """An operation was called with input that violates its contract."""


class UnsupportedExactError(PreconditionError):
    """Exact (symbolic) treatment of this object is not available."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree (exact vs. numeric, dual formulas) disagreed.

    Raising this signals an internal cross-check failure, not bad user input;
    the CLI maps it to exit code 3.
    """
