"""Framed-link presentation of a 2-handlebody."""
from dataclasses import dataclass
from typing import Tuple

from src.tools.lattice_core.domain.exceptions import MalformedGramError
from src.tools.lattice_core.domain.models import Rows, to_rows
from .exceptions import PayloadError


@dataclass(frozen=True)
class FramedLinkData:
    """
    Framings and pairwise linking numbers of a link L = L_1 ∪ ... ∪ L_n.

    The diagonal of ``linking`` carries no meaning and is ignored.

    Attributes:
        framings: a_ii, the framing of each component
        linking: n x n matrix of linking numbers lk(L_i, L_j)
    """
    framings: Tuple[int, ...]
    linking: Rows

    def __post_init__(self):
        try:
            framings = to_rows([self.framings])[0] if self.framings else ()
            linking = to_rows(self.linking)
        except MalformedGramError as e:
            raise PayloadError(f"Framed link must hold integers: {e.message}") from e
        n = len(framings)
        if len(linking) != n or any(len(row) != n for row in linking):
            raise PayloadError(
                f"Linking matrix must be {n}x{n} to match {n} framing(s)"
            )
        object.__setattr__(self, "framings", framings)
        object.__setattr__(self, "linking", linking)

    @property
    def n(self) -> int:
        return len(self.framings)
