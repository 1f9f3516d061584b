"""Domain models for degree decisions and covering reports."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .exceptions import DecisionError


class FamilyKind(Enum):
    """Shape of a degree family."""
    EMPTY = "empty"
    ALL = "all"
    ALL_EVEN = "all_even"
    SQUARE_CLOSURE = "square_closure"


def _square_quotient(d: int, b: int) -> Optional[int]:
    """h if d = h²·b for a positive integer h, else None."""
    if d % b:
        return None
    h = math.isqrt(d // b)
    return h if h * h == d // b else None


def reduce_base(base) -> Tuple[int, ...]:
    """Drop every element that is another element times a square > 1."""
    values = sorted(set(int(b) for b in base))
    if any(b < 1 for b in values):
        raise DecisionError(f"Degree base must contain positive integers, got {values}")
    kept = [
        b for b in values
        if not any(c != b and (h := _square_quotient(b, c)) is not None and h > 1 for c in values)
    ]
    return tuple(kept)


@dataclass(frozen=True)
class DegreeFamily:
    """
    Symbolic set of degrees.

    ``square_closure`` holds every h²·b for b in ``base`` and h >= 1; the
    base is kept canonically reduced.
    """
    kind: FamilyKind
    base: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is FamilyKind.SQUARE_CLOSURE:
            object.__setattr__(self, "base", reduce_base(self.base))
            if not self.base:
                object.__setattr__(self, "kind", FamilyKind.EMPTY)
        elif self.base:
            object.__setattr__(self, "base", ())

    @classmethod
    def empty(cls) -> "DegreeFamily":
        return cls(FamilyKind.EMPTY)

    @classmethod
    def all_degrees(cls) -> "DegreeFamily":
        return cls(FamilyKind.ALL)

    @classmethod
    def even_degrees(cls) -> "DegreeFamily":
        return cls(FamilyKind.ALL_EVEN)

    @classmethod
    def square_closure(cls, *base: int) -> "DegreeFamily":
        return cls(FamilyKind.SQUARE_CLOSURE, tuple(base))

    def contains(self, d: int) -> bool:
        if d < 1:
            return False
        if self.kind is FamilyKind.ALL:
            return True
        if self.kind is FamilyKind.ALL_EVEN:
            return d % 2 == 0
        if self.kind is FamilyKind.SQUARE_CLOSURE:
            return self.decompose(d) is not None
        return False

    def __contains__(self, d: int) -> bool:
        return self.contains(d)

    def decompose(self, d: int) -> Optional[Tuple[int, int]]:
        """
        (b, h) with d = h²·b for the least base degree b, or None.

        For ``all`` and ``all_even`` members this is (d, 1).
        """
        if self.kind is FamilyKind.SQUARE_CLOSURE:
            for b in self.base:
                h = _square_quotient(d, b)
                if h is not None:
                    return b, h
            return None
        return (d, 1) if self.contains(d) else None

    def members(self, limit: int) -> List[int]:
        """Members up to and including ``limit``."""
        return [d for d in range(1, limit + 1) if self.contains(d)]

    def __str__(self) -> str:
        if self.kind is FamilyKind.SQUARE_CLOSURE:
            return "{h²·b : b in " + "{" + ", ".join(str(b) for b in self.base) + "}, h >= 1}"
        return {
            FamilyKind.EMPTY: "{}",
            FamilyKind.ALL: "all d >= 1",
            FamilyKind.ALL_EVEN: "all even d",
        }[self.kind]


class DegreeStatus(Enum):
    GUARANTEED = "guaranteed"
    IMPOSSIBLE = "impossible"
    UNKNOWN = "unknown"


class CoveringStatus(Enum):
    GUARANTEED_COVERING = "guaranteed-covering"
    IMPOSSIBLE = "impossible"
    UNKNOWN = "unknown"
    BELOW_THEOREM_RANGE = "below-theorem-range"


class BranchRegularity(Enum):
    """Regularity of the branch surface of a covering of degree d >= 4."""
    NODAL = "nodal"
    LOCALLY_FLAT = "locally_flat"

    @classmethod
    def for_degree(cls, d: int) -> "BranchRegularity":
        return cls.NODAL if d == 4 else cls.LOCALLY_FLAT


class ObstructionKind(Enum):
    B2_PLUS_INEQUALITY = "b2_plus_inequality"
    B2_MINUS_INEQUALITY = "b2_minus_inequality"
    PARITY = "parity"


@dataclass(frozen=True)
class Obstruction:
    """
    Proof that some degrees cannot occur.

    Inequality obstructions rule out every degree; the parity obstruction
    rules out odd degrees only.
    """
    kind: ObstructionKind
    detail: str

    def rules_out(self, d: int) -> bool:
        if self.kind is ObstructionKind.PARITY:
            return d % 2 == 1
        return True


@dataclass(frozen=True)
class TableRow:
    """One row of the degree table: its number and the degrees it provides."""
    number: int
    family: DegreeFamily
    condition: str


@dataclass
class DecisionReport:
    """
    Full answer for a pair (N, M).

    Attributes:
        embeddable_at_all: both b2 inequalities hold
        applicable_cases: table rows that apply, in table order
        guaranteed: union of the degrees the applicable rows provide
        obstructions: proven obstructions
        degree_status: status of each queried degree
        covering: covering consequence for each queried degree
        branch_regularity: regularity for each guaranteed covering degree
        assumes_no_13_handles: the handle hypothesis as supplied by the caller
    """
    embeddable_at_all: bool
    applicable_cases: List[int]
    guaranteed: DegreeFamily
    obstructions: List[Obstruction] = field(default_factory=list)
    degree_status: Dict[int, DegreeStatus] = field(default_factory=dict)
    covering: Dict[int, CoveringStatus] = field(default_factory=dict)
    branch_regularity: Dict[int, BranchRegularity] = field(default_factory=dict)
    assumes_no_13_handles: bool = False

    @property
    def applicable_case(self) -> Optional[int]:
        return self.applicable_cases[-1] if self.applicable_cases else None
