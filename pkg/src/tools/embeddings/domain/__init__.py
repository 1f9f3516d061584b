"""Embeddings domain layer."""
from .models import Embedding
from .exceptions import (
    EmbeddingError,
    DimensionMismatchError,
    ChainMismatchError,
    DegreeMismatchError,
    UnsupportedDegreeError,
    FrameNotFoundError,
    InvalidCertificateError,
)

__all__ = [
    "Embedding",
    "EmbeddingError",
    "DimensionMismatchError",
    "ChainMismatchError",
    "DegreeMismatchError",
    "UnsupportedDegreeError",
    "FrameNotFoundError",
    "InvalidCertificateError",
]
