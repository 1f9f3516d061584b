"""Domain models for integer symmetric bilinear forms.

A form on a free abelian group of rank n is stored as its Gram matrix with
respect to a fixed basis. Entries are Python integers, so nothing ever
overflows when forms are rescaled or composed.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence, Tuple

import numpy as np

from .exceptions import (
    AsymmetricGramError,
    InvalidInvariantsError,
    MalformedGramError,
)

Rows = Tuple[Tuple[int, ...], ...]


class Parity(Enum):
    """Type of a form: even iff every vector has even self-pairing."""
    EVEN = "even"
    ODD = "odd"


class Inertia(NamedTuple):
    """Counts of positive, zero and negative diagonal entries after diagonalization."""
    n_plus: int
    n_zero: int
    n_minus: int


def _as_int(value) -> int:
    # bool is an int subclass but never a valid entry
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise MalformedGramError(f"Gram entries must be integers, got {value!r}")
    return int(value)


def to_rows(rows: Sequence[Sequence[int]]) -> Rows:
    """Normalize a nested sequence of integers to a tuple of tuples."""
    try:
        return tuple(tuple(_as_int(x) for x in row) for row in rows)
    except TypeError as e:
        raise MalformedGramError(f"Gram matrix must be a list of rows: {e}") from e


@dataclass(frozen=True)
class GramMatrix:
    """
    Square symmetric integer matrix representing a bilinear form.

    Attributes:
        entries: rank x rank tuple of tuples of integers
    """
    entries: Rows

    def __post_init__(self):
        """Normalize and validate: square and exactly symmetric."""
        rows = to_rows(self.entries)
        object.__setattr__(self, "entries", rows)

        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedGramError(
                    f"Gram matrix must be square: row {i} has length {len(row)}, expected {n}"
                )
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricGramError(
                        f"Gram matrix is not symmetric at ({i}, {j}): "
                        f"{rows[i][j]} != {rows[j][i]}"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GramMatrix":
        """Build a Gram matrix from any nested sequence of integers."""
        return cls(to_rows(rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "GramMatrix":
        """Build a Gram matrix from a 2-d integer (or object) array."""
        return cls(to_rows(array.tolist()))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        """Object-dtype copy of the entries (exact Python ints)."""
        return np.array(self.entries, dtype=object).reshape(self.rank, self.rank)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.rank))

    def submatrix(self, indices: Sequence[int]) -> "GramMatrix":
        """Principal submatrix on the given basis indices (in the given order)."""
        return GramMatrix(tuple(
            tuple(self.entries[i][j] for j in indices) for i in indices
        ))

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Exact value of u^t G v."""
        return sum(
            u[i] * self.entries[i][j] * v[j]
            for i in range(self.rank) if u[i]
            for j in range(self.rank) if v[j]
        )

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"


@dataclass(frozen=True)
class FormInvariants:
    """
    Classifying data of a unimodular form (indefinite or smoothable case).

    Attributes:
        b2_plus: dimension of a maximal positive definite subspace
        b2_minus: dimension of a maximal negative definite subspace
        parity: even or odd
    """
    b2_plus: int
    b2_minus: int
    parity: Parity

    def __post_init__(self):
        for name in ("b2_plus", "b2_minus"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InvalidInvariantsError(f"{name} must be a nonnegative integer, got {value!r}")
        if not isinstance(self.parity, Parity):
            try:
                object.__setattr__(self, "parity", Parity(self.parity))
            except ValueError as e:
                raise InvalidInvariantsError(f"parity must be 'even' or 'odd', got {self.parity!r}") from e

    @property
    def rank(self) -> int:
        return self.b2_plus + self.b2_minus

    @property
    def signature(self) -> int:
        return self.b2_plus - self.b2_minus

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    def __str__(self) -> str:
        return f"({self.b2_plus}, {self.b2_minus}, {self.parity.value})"
