"""Domain models for the standard lattices and their block layout."""
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Optional, Tuple, Union


class Sign(IntEnum):
    """Orientation of a definite summand; the value is the scalar ±1."""
    PLUS = 1
    MINUS = -1

    @classmethod
    def of(cls, value: Union["Sign", int, str]) -> "Sign":
        """Coerce ±1, '+', '-', 'plus' or 'minus' to a Sign."""
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("+", "plus", "+1", "1"):
                return cls.PLUS
            if key in ("-", "minus", "-1"):
                return cls.MINUS
            raise ValueError(f"Unknown sign {value!r}")
        if isinstance(value, bool):
            raise ValueError(f"Unknown sign {value!r}")
        return cls(int(value))

    @property
    def label(self) -> str:
        return "plus" if self is Sign.PLUS else "minus"


@dataclass(frozen=True)
class FormLayout:
    """
    Index bookkeeping for a Serre normal form.

    Basis indices are grouped by summand in the order the normal form lists
    them: diagonal +1 then -1 slots (odd forms), or E8 blocks then H blocks
    (even forms).

    Attributes:
        rank: total rank
        positive_slots: indices of ⟨+1⟩ summands
        negative_slots: indices of ⟨-1⟩ summands
        e8_blocks: 8 consecutive indices per ±E8 summand
        e8_sign: sign of the E8 summands (None when there are none)
        hyperbolic_blocks: (i, i+1) index pairs, one per H summand
    """
    rank: int
    positive_slots: Tuple[int, ...] = field(default_factory=tuple)
    negative_slots: Tuple[int, ...] = field(default_factory=tuple)
    e8_blocks: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)
    e8_sign: Optional[Sign] = None
    hyperbolic_blocks: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    @property
    def is_diagonal(self) -> bool:
        return not self.e8_blocks and not self.hyperbolic_blocks
