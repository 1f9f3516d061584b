"""Domain exceptions for the decision engine."""


class DecisionError(Exception):
    """Base exception for degree decisions and embedding assembly."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class InvalidDegreeError(DecisionError):
    """Raised when a queried degree is not a positive integer."""
    pass


class NotGuaranteedError(DecisionError):
    """
    Raised when construct_embedding is asked for a degree outside the
    guaranteed family.

    Attributes:
        status: the degree status that was found instead
    """

    def __init__(self, message: str, status=None):
        self.status = status
        super().__init__(message)


class AllocationInfeasibleError(DecisionError):
    """
    Raised when the summand allocator cannot place a piece.

    For guaranteed inputs this contradicts the degree table and marks a
    defect; it is surfaced instead of patched.
    """
    pass
