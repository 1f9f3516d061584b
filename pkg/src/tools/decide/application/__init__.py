"""Decide application layer."""
from .services import (
    applicable_rows,
    construct_embedding,
    covering_report,
    degree_status,
    embeddable_any_d,
    guaranteed_degrees,
    least_covering_degree,
    obstructions,
)

__all__ = [
    "applicable_rows",
    "construct_embedding",
    "covering_report",
    "degree_status",
    "embeddable_any_d",
    "guaranteed_degrees",
    "least_covering_degree",
    "obstructions",
]
