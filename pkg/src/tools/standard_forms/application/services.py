"""Constructors for the standard lattices and the Serre normal form."""
import logging
from typing import Union

from src.tools.lattice_core.application.operations import direct_sum_all, negate
from src.tools.lattice_core.domain.exceptions import (
    EmptyOddFormError,
    EvenSignatureNotMultipleOf8Error,
    InvalidInvariantsError,
)
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix
from ..domain.models import FormLayout, Sign
from ..infrastructure.catalog import E8_RANK, E8_ROWS, HYPERBOLIC_ROWS

logger = logging.getLogger(__name__)


def _check_count(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInvariantsError(f"{name} must be a nonnegative integer, got {value!r}")


def diag_form(p: int, q: int) -> GramMatrix:
    """diag(+1 × p, -1 × q)."""
    _check_count("p", p)
    _check_count("q", q)
    diagonal = [1] * p + [-1] * q
    n = p + q
    return GramMatrix(tuple(
        tuple(diagonal[i] if i == j else 0 for j in range(n)) for i in range(n)
    ))


def hyperbolic_sum(n: int) -> GramMatrix:
    """n copies of H = [[0,1],[1,0]]."""
    _check_count("n", n)
    h = GramMatrix(HYPERBOLIC_ROWS)
    return direct_sum_all(*([h] * n))


def e8_form(sign: Union[Sign, int, str] = Sign.PLUS) -> GramMatrix:
    """The E8 Gram matrix, negated for sign minus."""
    e8 = GramMatrix(E8_ROWS)
    return e8 if Sign.of(sign) is Sign.PLUS else negate(e8)


def validate_invariants(inv: FormInvariants) -> None:
    """
    Check that (b2+, b2-, parity) is realised by a normal form.

    Odd forms need rank >= 1; even forms need signature divisible by 8.

    Raises:
        EmptyOddFormError: odd parity with rank 0
        EvenSignatureNotMultipleOf8Error: even parity, σ not ≡ 0 mod 8
    """
    if inv.is_even:
        if inv.signature % 8 != 0:
            raise EvenSignatureNotMultipleOf8Error(
                f"Even form {inv} has signature {inv.signature}, which is not a multiple of 8"
            )
    elif inv.rank == 0:
        raise EmptyOddFormError(f"Odd form {inv} has rank 0; an odd form needs a vector of odd norm")


def serre_layout(inv: FormInvariants) -> FormLayout:
    """Summand index layout of serre_normal_form(inv)."""
    validate_invariants(inv)
    if not inv.is_even:
        return FormLayout(
            rank=inv.rank,
            positive_slots=tuple(range(inv.b2_plus)),
            negative_slots=tuple(range(inv.b2_plus, inv.rank)),
        )

    e8_count = abs(inv.signature) // 8
    e8_blocks = tuple(
        tuple(range(E8_RANK * b, E8_RANK * (b + 1))) for b in range(e8_count)
    )
    offset = E8_RANK * e8_count
    h_count = min(inv.b2_plus, inv.b2_minus)
    hyperbolic_blocks = tuple(
        (offset + 2 * b, offset + 2 * b + 1) for b in range(h_count)
    )
    e8_sign = None
    if e8_count:
        e8_sign = Sign.PLUS if inv.signature > 0 else Sign.MINUS
    return FormLayout(
        rank=inv.rank,
        e8_blocks=e8_blocks,
        e8_sign=e8_sign,
        hyperbolic_blocks=hyperbolic_blocks,
    )


def serre_normal_form(inv: FormInvariants) -> GramMatrix:
    """
    Normal form of a unimodular form with the given invariants.

    Odd: diag(+1 × b2+, -1 × b2-). Even: |σ|/8 copies of ±E8 followed by
    min(b2+, b2-) copies of H.
    """
    layout = serre_layout(inv)
    if not inv.is_even:
        return diag_form(inv.b2_plus, inv.b2_minus)

    blocks = [e8_form(layout.e8_sign) for _ in layout.e8_blocks]
    blocks.append(hyperbolic_sum(len(layout.hyperbolic_blocks)))
    gram = direct_sum_all(*blocks)
    logger.debug(
        f"Normal form of {inv}: {len(layout.e8_blocks)} E8 block(s), "
        f"{len(layout.hyperbolic_blocks)} H block(s)"
    )
    return gram
