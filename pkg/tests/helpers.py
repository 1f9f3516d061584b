"""Small builders used across the tests."""
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix, Parity

K3 = FormInvariants(3, 19, Parity.EVEN)


def inv(b2_plus: int, b2_minus: int, parity: str) -> FormInvariants:
    return FormInvariants(b2_plus, b2_minus, Parity(parity))


def gram(*rows) -> GramMatrix:
    return GramMatrix.from_rows(rows)


def is_valid(b2_plus: int, b2_minus: int, parity: str) -> bool:
    """Invariants realised by a normal form (independent of the library's check)."""
    if parity == "even":
        return (b2_plus - b2_minus) % 8 == 0
    return b2_plus + b2_minus > 0
