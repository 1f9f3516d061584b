"""Domain exceptions for embedding certificates."""


class EmbeddingError(Exception):
    """Base exception for embedding certificates and their constructors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class DimensionMismatchError(EmbeddingError):
    """
    Raised when a certificate matrix does not have shape
    rank(target) x rank(source).
    """
    pass


class ChainMismatchError(EmbeddingError):
    """Raised when composing embeddings whose inner target is not the outer source."""
    pass


class DegreeMismatchError(EmbeddingError):
    """Raised when summing embeddings of different degrees."""
    pass


class UnsupportedDegreeError(EmbeddingError):
    """
    Raised when a fixed construction is asked for a degree it does not cover.

    Example:
        - l_matrix(3)
        - e8_into_e8(6)
    """
    pass


class FrameNotFoundError(EmbeddingError):
    """Raised when no orthogonal frame of the requested norm exists in E8."""
    pass


class InvalidCertificateError(EmbeddingError):
    """
    Raised when a constructor's result fails ᵗT·G_M·T = d·G_N.

    This is never expected; it marks a defect in the construction.
    """
    pass
