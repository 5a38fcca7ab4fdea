"""Kernels, moments and hypergeometric series on generalized Kepler manifolds."""

from kepler.jordan_core import (
    DomainError,
    JordanType,
    LogValue,
    PoleError,
    derive_invariants,
    parse_type_name,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "JordanType",
    "LogValue",
    "PoleError",
    "derive_invariants",
    "parse_type_name",
]
