"""Trace-zero Gram matrices of tame cyclic number fields."""

from ._core import (
    CyclicShapeError,
    InvariantError,
    ParseError,
    ValidationError,
    coefficients,
    determinant,
    full_trace_gram,
    isometric,
    run_cli,
    trace_zero_gram,
)

__all__ = [
    "CyclicShapeError",
    "InvariantError",
    "ParseError",
    "ValidationError",
    "coefficients",
    "determinant",
    "full_trace_gram",
    "isometric",
    "run_cli",
    "trace_zero_gram",
]
