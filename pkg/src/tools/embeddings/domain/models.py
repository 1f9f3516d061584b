"""The embedding certificate."""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.tools.lattice_core.domain.exceptions import MalformedGramError
from src.tools.lattice_core.domain.models import GramMatrix, Rows, to_rows
from src.tools.lattice_core.infrastructure.matrix_ops import object_array
from .exceptions import DimensionMismatchError, EmbeddingError


@dataclass(frozen=True)
class Embedding:
    """
    Certificate of an isometric embedding d·(source) ↪ (target).

    Column j of ``matrix`` is the image of the j-th source basis vector
    written in the target basis, so the defining identity is
    ᵗT·G_target·T = d·G_source. Construction checks shapes only; use
    ``verify`` to check the identity.

    Attributes:
        degree: positive scaling factor d
        source: Gram matrix of the embedded lattice (rank n)
        target: Gram matrix of the ambient lattice (rank m)
        matrix: m x n integer matrix T, row-major
    """
    degree: int
    source: GramMatrix
    target: GramMatrix
    matrix: Rows

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise EmbeddingError(f"Degree must be a positive integer, got {self.degree!r}")
        try:
            rows = to_rows(self.matrix)
        except MalformedGramError as e:
            raise DimensionMismatchError(f"Embedding matrix is malformed: {e.message}") from e
        object.__setattr__(self, "matrix", rows)

        m, n = self.target.rank, self.source.rank
        if len(rows) != m:
            raise DimensionMismatchError(
                f"Embedding matrix has {len(rows)} rows, target rank is {m}"
            )
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatchError(
                    f"Embedding matrix row {i} has {len(row)} columns, source rank is {n}"
                )

    @property
    def shape(self) -> Tuple[int, int]:
        return self.target.rank, self.source.rank

    @property
    def array(self) -> np.ndarray:
        """Object-dtype copy of T."""
        return object_array(self.matrix, *self.shape)

    def column(self, j: int) -> Tuple[int, ...]:
        """Image of the j-th source basis vector."""
        return tuple(row[j] for row in self.matrix)

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.source.rank))
