"""Operations on integer symmetric bilinear forms."""
import logging

from ..domain.exceptions import DegenerateFormError, NotUnimodularError, ZeroScaleError
from ..domain.models import FormInvariants, GramMatrix, Inertia, Parity
from ..infrastructure.exact_algebra import BareissDeterminant, CongruenceDiagonalizer
from ..infrastructure.matrix_ops import block_diagonal

logger = logging.getLogger(__name__)

_determinant = BareissDeterminant()
_diagonalizer = CongruenceDiagonalizer()


def determinant(g: GramMatrix) -> int:
    """Exact determinant (1 for the empty form)."""
    return _determinant.compute(g.entries)


def signature(g: GramMatrix) -> Inertia:
    """Return (n_plus, n_zero, n_minus) of the form."""
    return _diagonalizer.inertia(g.entries)


def parity(g: GramMatrix) -> Parity:
    """Even iff every diagonal entry is even."""
    if all(x % 2 == 0 for x in g.diagonal()):
        return Parity.EVEN
    return Parity.ODD


def is_unimodular(g: GramMatrix) -> bool:
    return abs(determinant(g)) == 1


def invariants(g: GramMatrix) -> FormInvariants:
    """
    Classifying data (b2+, b2-, parity) of a unimodular form.

    Raises:
        NotUnimodularError: |det| != 1
        DegenerateFormError: the form has a radical
    """
    inertia = signature(g)
    if inertia.n_zero > 0:
        raise DegenerateFormError(
            f"Form of rank {g.rank} is degenerate: {inertia.n_zero} zero direction(s)"
        )
    det = determinant(g)
    if abs(det) != 1:
        raise NotUnimodularError(f"Form is not unimodular: determinant {det}")
    return FormInvariants(inertia.n_plus, inertia.n_minus, parity(g))


def direct_sum(g1: GramMatrix, g2: GramMatrix) -> GramMatrix:
    """Block-diagonal sum g1 ⊕ g2."""
    return GramMatrix.from_array(block_diagonal(g1.array, g2.array))


def direct_sum_all(*grams: GramMatrix) -> GramMatrix:
    """Block-diagonal sum of any number of forms (the empty form for none)."""
    return GramMatrix.from_array(block_diagonal(*(g.array for g in grams)))


def scale(g: GramMatrix, k: int) -> GramMatrix:
    """Multiply every pairing by the nonzero integer k."""
    if k == 0:
        raise ZeroScaleError("Cannot scale a form by 0")
    return GramMatrix(tuple(tuple(k * x for x in row) for row in g.entries))


def negate(g: GramMatrix) -> GramMatrix:
    return scale(g, -1)
