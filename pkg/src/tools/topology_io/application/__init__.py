"""Topology input application layer."""
from .services import (
    connected_sum,
    gram_from_framed_link,
    load_embedding,
    load_gram,
    load_invariants,
    load_link,
    preset,
    preset_link,
    preset_names,
)

__all__ = [
    "connected_sum",
    "gram_from_framed_link",
    "load_embedding",
    "load_gram",
    "load_invariants",
    "load_link",
    "preset",
    "preset_link",
    "preset_names",
]
