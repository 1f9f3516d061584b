"""Lattice core domain layer."""
from .models import GramMatrix, FormInvariants, Inertia, Parity
from .exceptions import (
    LatticeError,
    MalformedGramError,
    AsymmetricGramError,
    NotUnimodularError,
    DegenerateFormError,
    ZeroScaleError,
    InvalidInvariantsError,
    EvenSignatureNotMultipleOf8Error,
    EmptyOddFormError,
)

__all__ = [
    "GramMatrix",
    "FormInvariants",
    "Inertia",
    "Parity",
    "LatticeError",
    "MalformedGramError",
    "AsymmetricGramError",
    "NotUnimodularError",
    "DegenerateFormError",
    "ZeroScaleError",
    "InvalidInvariantsError",
    "EvenSignatureNotMultipleOf8Error",
    "EmptyOddFormError",
]
