"""
Exact elimination routines for integer symmetric matrices.

- BareissDeterminant: fraction-free Gaussian elimination over Python ints
- CongruenceDiagonalizer: symmetric congruence diagonalization over
  Fractions, yielding the inertia of a form
"""
import logging
from fractions import Fraction
from typing import List, Sequence

from ..domain.models import Inertia

logger = logging.getLogger(__name__)


class BareissDeterminant:
    """
    Fraction-free determinant.

    Each step divides exactly by the previous pivot, so every intermediate
    value stays an integer (a minor of the input).
    """

    def compute(self, rows: Sequence[Sequence[int]]) -> int:
        n = len(rows)
        if n == 0:
            return 1
        m: List[List[int]] = [list(row) for row in rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = pivot
        return sign * m[n - 1][n - 1]


class CongruenceDiagonalizer:
    """
    Inertia of a symmetric integer matrix by exact congruence.

    The pivot is the lowest-index active row with a nonzero diagonal entry.
    When every active diagonal entry vanishes but an off-diagonal entry
    a_ij does not, row/column j is added to row/column i, which puts 2*a_ij
    on the diagonal. Eliminating a pivot replaces the remaining block by
    its Schur complement.
    """

    def inertia(self, rows: Sequence[Sequence[int]]) -> Inertia:
        a = [[Fraction(x) for x in row] for row in rows]
        active = list(range(len(a)))
        n_plus = n_minus = 0

        while active:
            pivot = next((i for i in active if a[i][i] != 0), None)
            if pivot is None:
                pair = next(
                    ((i, j) for i in active for j in active if i < j and a[i][j] != 0),
                    None,
                )
                if pair is None:
                    break
                i, j = pair
                for k in active:
                    a[i][k] += a[j][k]
                for k in active:
                    a[k][i] += a[k][j]
                continue

            p = a[pivot][pivot]
            if p > 0:
                n_plus += 1
            else:
                n_minus += 1
            active.remove(pivot)
            for i in active:
                factor = a[i][pivot] / p
                if factor == 0:
                    continue
                for j in active:
                    a[i][j] -= factor * a[pivot][j]

        n_zero = len(active)
        logger.debug(f"Inertia of rank-{len(a)} form: (+{n_plus}, 0x{n_zero}, -{n_minus})")
        return Inertia(n_plus, n_zero, n_minus)
