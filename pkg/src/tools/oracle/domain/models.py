"""Result types of the search oracle."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.tools.embeddings.domain.models import Embedding


class SearchStatus(Enum):
    """
    Outcome of an embedding search.

    FOUND: a verified certificate was found
    NONE: exhaustive search proved that no certificate exists
    BOUNDED_NONE: nothing inside the coordinate box (not a proof)
    REFUSED: the box was too large to search
    """
    FOUND = "found"
    NONE = "none"
    BOUNDED_NONE = "bounded-none"
    REFUSED = "refused"


@dataclass(frozen=True)
class SearchResult:
    """
    Structured answer of brute_force_embedding.

    Attributes:
        status: see SearchStatus
        embedding: the certificate when status is FOUND
        exhaustive: True when the search space was provably complete
        bound: coordinate bound of the box (None for definite targets)
        nodes: backtracking nodes visited
    """
    status: SearchStatus
    embedding: Optional[Embedding] = None
    exhaustive: bool = True
    bound: Optional[int] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def conclusive(self) -> bool:
        return self.status in (SearchStatus.FOUND, SearchStatus.NONE)
