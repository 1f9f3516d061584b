"""Mappers from domain models to JSON-serializable dictionaries."""
from .lattice_mapper import LatticeMapper

__all__ = ["LatticeMapper"]
