"""Domain exceptions for integer symmetric bilinear forms."""


class LatticeError(Exception):
    """
    Base exception for the lattice core.

    All errors raised while building or classifying Gram matrices inherit
    from this class.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class MalformedGramError(LatticeError):
    """
    Raised when a Gram matrix is not a square array of integers.

    Example:
        - ragged rows
        - non-integer entries (floats, strings, booleans)
    """
    pass


class AsymmetricGramError(LatticeError):
    """Raised when entries[i][j] != entries[j][i] for some i, j."""
    pass


class NotUnimodularError(LatticeError):
    """Raised when |det| != 1 where a unimodular form is required."""
    pass


class DegenerateFormError(LatticeError):
    """Raised when the form has a nontrivial radical (n_zero > 0)."""
    pass


class ZeroScaleError(LatticeError):
    """Raised when a form is rescaled by 0."""
    pass


class InvalidInvariantsError(LatticeError):
    """
    Raised when a (b2+, b2-, parity) triple is not realised by any
    unimodular form of the normal-form families.
    """
    pass


class EvenSignatureNotMultipleOf8Error(InvalidInvariantsError):
    """Raised for even invariants whose signature is not divisible by 8."""
    pass


class EmptyOddFormError(InvalidInvariantsError):
    """Raised for odd invariants of rank 0 (an odd form needs an odd vector)."""
    pass
