"""Standard forms application layer."""
from .services import (
    diag_form,
    e8_form,
    hyperbolic_sum,
    serre_layout,
    serre_normal_form,
    validate_invariants,
)

__all__ = [
    "diag_form",
    "e8_form",
    "hyperbolic_sum",
    "serre_layout",
    "serre_normal_form",
    "validate_invariants",
]
