"""Domain exceptions for the search oracle."""


class OracleError(Exception):
    """Base exception for the search oracle."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class NotPositiveDefiniteError(OracleError):
    """Raised when vector enumeration is asked for a form that is not positive definite."""
    pass
