"""
Column-by-column backtracking for Gram-matrix realisation problems.

Given a target form G, per-column candidate vectors and the required
pairings between columns, find the lexicographically least choice of
columns (v_0, ..., v_{n-1}) with ᵗv_i·G·v_j = required[i][j] for i != j.
Norms are assumed to be enforced by the candidate lists.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from src.tools.lattice_core.domain.models import GramMatrix

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class ColumnBacktracker:
    """
    Depth-first search with forward checking.

    After each choice the domains of all later columns are filtered by
    their required pairing with the chosen vector; an empty domain prunes
    the branch. In ``increasing`` mode (used when every column shares one
    candidate list) chosen indices must strictly increase.
    """

    def __init__(self, gram: GramMatrix):
        self.gram = gram
        self.nodes = 0

    def _image(self, v: Vector) -> Vector:
        rows = self.gram.entries
        return tuple(sum(r[j] * v[j] for j in range(len(v)) if v[j]) for r in rows)

    def solve(
        self,
        candidates: Sequence[Sequence[Vector]],
        required: Sequence[Sequence[int]],
        increasing: bool = False,
    ) -> Optional[List[Vector]]:
        n = len(candidates)
        if n == 0:
            return []
        images = [[self._image(v) for v in column] for column in candidates]
        shared = {}
        domains = [shared.setdefault(id(column), list(range(len(column)))) for column in candidates]
        chosen: List[int] = []

        def pairing(image: Vector, w: Vector) -> int:
            return sum(a * b for a, b in zip(image, w) if a and b)

        def search(j: int, domains: List[List[int]]) -> bool:
            if j == n:
                return True
            for idx in domains[j]:
                self.nodes += 1
                image = images[j][idx]
                next_domains = domains[:j + 1]
                feasible = True
                filtered = {}
                for l in range(j + 1, n):
                    want = required[j][l]
                    column = candidates[l]
                    key = (id(domains[l]), id(column), want)
                    kept = filtered.get(key)
                    if kept is None:
                        kept = [
                            c for c in domains[l]
                            if (not increasing or c > idx) and pairing(image, column[c]) == want
                        ]
                        filtered[key] = kept
                    if not kept or (increasing and len(kept) < n - l):
                        feasible = False
                        break
                    next_domains.append(kept)
                if not feasible:
                    continue
                chosen.append(idx)
                if search(j + 1, next_domains):
                    return True
                chosen.pop()
            return False

        solved = search(0, domains)
        logger.debug(f"Backtracking over {n} column(s): {self.nodes} node(s), solved={solved}")
        if not solved:
            return None
        return [candidates[j][idx] for j, idx in enumerate(chosen)]
