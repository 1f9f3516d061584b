"""Lattice core application layer."""
from .operations import (
    determinant,
    direct_sum,
    direct_sum_all,
    invariants,
    is_unimodular,
    negate,
    parity,
    scale,
    signature,
)

__all__ = [
    "determinant",
    "direct_sum",
    "direct_sum_all",
    "invariants",
    "is_unimodular",
    "negate",
    "parity",
    "scale",
    "signature",
]
