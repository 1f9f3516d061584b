"""
Short-vector enumeration in positive definite lattices.

The Gram matrix is decomposed exactly over Fractions into
Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)², and coordinates are enumerated
from the last one down, each within the interval allowed by the budget
left over from the coordinates already fixed.
"""
import logging
import math
from fractions import Fraction
from typing import List, Tuple

from src.tools.lattice_core.domain.models import GramMatrix
from ..domain.exceptions import NotPositiveDefiniteError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class FinckePohstEnumerator:
    """Exact enumeration of lattice vectors of a given norm."""

    def __init__(self, gram: GramMatrix):
        self.gram = gram
        self.rank = gram.rank
        self.q = self._decompose()
        self.nodes = 0

    def _decompose(self) -> List[List[Fraction]]:
        n = self.rank
        q = [[Fraction(x) for x in row] for row in self.gram.entries]
        for i in range(n):
            if q[i][i] <= 0:
                raise NotPositiveDefiniteError(
                    f"Form is not positive definite (pivot {i} is {q[i][i]})"
                )
            for j in range(i + 1, n):
                q[j][i] = q[i][j]
                q[i][j] = q[i][j] / q[i][i]
            for k in range(i + 1, n):
                for l in range(k, n):
                    q[k][l] -= q[k][i] * q[i][l]
        return q

    def vectors_of_norm(self, k: int) -> List[Vector]:
        """All v with ᵗv·G·v = k, sorted lexicographically."""
        n = self.rank
        q = self.q
        x = [0] * n
        found: List[Vector] = []

        def search(i: int, remaining: Fraction) -> None:
            self.nodes += 1
            if i < 0:
                if remaining == 0:
                    found.append(tuple(x))
                return
            center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
            qii = q[i][i]
            start = math.floor(center)

            xi = start
            while True:
                left = remaining - qii * (xi - center) ** 2
                if left < 0:
                    break
                x[i] = xi
                search(i - 1, left)
                xi -= 1

            xi = start + 1
            while True:
                left = remaining - qii * (xi - center) ** 2
                if left < 0:
                    break
                x[i] = xi
                search(i - 1, left)
                xi += 1
            x[i] = 0

        search(n - 1, Fraction(k))
        found.sort()
        logger.debug(f"Norm {k}: {len(found)} vector(s) in rank {n} after {self.nodes} node(s)")
        return found
