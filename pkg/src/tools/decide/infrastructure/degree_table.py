"""
The eight-row degree table.

Rows are selected by the parities of the two forms and whether the
relevant signature vanishes:

    row  β_N   β_M   condition            degrees
    1    odd   odd   -                    1
    2    odd   odd   2·b2(N) <= b2(M)     5
    3    odd   even  σ(M) = 0             2k
    4    odd   even  σ(M) != 0            2, 4, 6
    5    even  odd   σ(N) = 0             2k
    6    even  odd   σ(N) != 0            2, 4, 6
    7    even  even  σ(N) = 0             k
    8    even  even  σ(N) != 0            4, 8, 12

Finite rows are closed under multiplication by squares. Row 8 reports the
full {4, 8, 12}; the summary statement for covering degrees onto even
targets names only 4 and 8, and 12 is kept here because the row provides it.
"""
import logging
from typing import List

from src.tools.lattice_core.domain.models import FormInvariants
from ..domain.exceptions import DecisionError
from ..domain.models import DegreeFamily, FamilyKind, TableRow

logger = logging.getLogger(__name__)


class DegreeTable:
    """Selects the applicable rows for a pair of invariants."""

    def rows_for(self, source: FormInvariants, target: FormInvariants) -> List[TableRow]:
        """Rows whose hypotheses hold, in table order (inequalities not checked here)."""
        if not source.is_even and not target.is_even:
            rows = [TableRow(1, DegreeFamily.square_closure(1), "β_N odd, β_M odd")]
            if 2 * source.rank <= target.rank:
                rows.append(TableRow(
                    2, DegreeFamily.square_closure(5), "β_N odd, β_M odd, 2·b2(N) <= b2(M)"
                ))
            return rows
        if not source.is_even:
            if target.signature == 0:
                return [TableRow(3, DegreeFamily.even_degrees(), "β_N odd, β_M even, σ(M) = 0")]
            return [TableRow(4, DegreeFamily.square_closure(2, 4, 6), "β_N odd, β_M even, σ(M) != 0")]
        if not target.is_even:
            if source.signature == 0:
                return [TableRow(5, DegreeFamily.even_degrees(), "β_N even, β_M odd, σ(N) = 0")]
            return [TableRow(6, DegreeFamily.square_closure(2, 4, 6), "β_N even, β_M odd, σ(N) != 0")]
        if source.signature == 0:
            return [TableRow(7, DegreeFamily.all_degrees(), "β_N even, β_M even, σ(N) = 0")]
        return [TableRow(8, DegreeFamily.square_closure(4, 8, 12), "β_N even, β_M even, σ(N) != 0")]

    @staticmethod
    def union(rows: List[TableRow]) -> DegreeFamily:
        """Union of the row families (the rows sharing a cell are square closures)."""
        if not rows:
            return DegreeFamily.empty()
        families = [row.family for row in rows]
        if len(families) == 1:
            return families[0]
        if any(f.kind is FamilyKind.ALL for f in families):
            return DegreeFamily.all_degrees()
        if all(f.kind is FamilyKind.SQUARE_CLOSURE for f in families):
            return DegreeFamily.square_closure(*(b for f in families for b in f.base))
        raise DecisionError(f"Cannot merge degree families {[str(f) for f in families]}")
