"""Topology input domain layer."""
from .models import FramedLinkData
from .exceptions import (
    TopologyInputError,
    AsymmetricLinkingError,
    UnknownPresetError,
    PayloadError,
)

__all__ = [
    "FramedLinkData",
    "TopologyInputError",
    "AsymmetricLinkingError",
    "UnknownPresetError",
    "PayloadError",
]
