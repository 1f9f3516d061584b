"""
Decision operations: which degrees d admit d·I_N ↪ I_M, what that implies
for branched coverings N → M, and explicit certificates between normal
forms.

The degree table gives sufficient conditions only. A degree outside the
guaranteed family is reported ``impossible`` solely when an obstruction
proves it, and ``unknown`` otherwise.
"""
import logging
from typing import Iterable, List, Optional

from src.shared.config import settings
from src.shared.constants import MIN_COVERING_DEGREE
from src.tools.embeddings.application.algebra import amplify
from src.tools.embeddings.domain.models import Embedding
from src.tools.lattice_core.domain.models import FormInvariants
from src.tools.standard_forms.application.services import validate_invariants
from ..domain.exceptions import InvalidDegreeError, NotGuaranteedError
from ..domain.models import (
    BranchRegularity,
    CoveringStatus,
    DecisionReport,
    DegreeFamily,
    DegreeStatus,
    Obstruction,
    ObstructionKind,
    TableRow,
)
from ..infrastructure.allocator import SummandAllocator
from ..infrastructure.degree_table import DegreeTable

logger = logging.getLogger(__name__)

_table = DegreeTable()


def _validate(source: FormInvariants, target: FormInvariants) -> None:
    validate_invariants(source)
    validate_invariants(target)


def _check_degree(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InvalidDegreeError(f"Degree must be a positive integer, got {d!r}")


def obstructions(source: FormInvariants, target: FormInvariants) -> List[Obstruction]:
    """Obstructions to d·I_N ↪ I_M (all degrees, or odd degrees for parity)."""
    _validate(source, target)
    found = []
    if source.b2_plus > target.b2_plus:
        found.append(Obstruction(
            ObstructionKind.B2_PLUS_INEQUALITY,
            f"b2+(N) = {source.b2_plus} > b2+(M) = {target.b2_plus}",
        ))
    if source.b2_minus > target.b2_minus:
        found.append(Obstruction(
            ObstructionKind.B2_MINUS_INEQUALITY,
            f"b2-(N) = {source.b2_minus} > b2-(M) = {target.b2_minus}",
        ))
    if not source.is_even and target.is_even:
        found.append(Obstruction(
            ObstructionKind.PARITY,
            "for odd d, d·I_N is odd while I_M is even; an odd lattice has no "
            "isometric embedding in an even one",
        ))
    return found


def embeddable_any_d(source: FormInvariants, target: FormInvariants) -> bool:
    """True iff b2+(N) <= b2+(M) and b2-(N) <= b2-(M)."""
    _validate(source, target)
    return source.b2_plus <= target.b2_plus and source.b2_minus <= target.b2_minus


def applicable_rows(source: FormInvariants, target: FormInvariants) -> List[TableRow]:
    """Degree-table rows that apply (none when the inequalities fail)."""
    if not embeddable_any_d(source, target):
        return []
    return _table.rows_for(source, target)


def guaranteed_degrees(source: FormInvariants, target: FormInvariants) -> DegreeFamily:
    """Degrees for which the table guarantees an embedding."""
    return DegreeTable.union(applicable_rows(source, target))


def degree_status(source: FormInvariants, target: FormInvariants, d: int) -> DegreeStatus:
    """guaranteed, impossible (with an obstruction) or unknown."""
    _check_degree(d)
    if any(o.rules_out(d) for o in obstructions(source, target)):
        return DegreeStatus.IMPOSSIBLE
    if guaranteed_degrees(source, target).contains(d):
        return DegreeStatus.GUARANTEED
    return DegreeStatus.UNKNOWN


def covering_report(
    source: FormInvariants,
    target: FormInvariants,
    n_has_no_13_handles: bool,
    degrees: Optional[Iterable[int]] = None,
) -> DecisionReport:
    """
    Decision report with covering consequences.

    A degree d >= 4 is a guaranteed covering degree when the embedding is
    guaranteed and the caller asserts that N has a handle decomposition
    without 1- and 3-handles. Degree 4 coverings may have nodal branch
    surfaces; from degree 5 on they are locally flat.

    Args:
        source: invariants of N
        target: invariants of M
        n_has_no_13_handles: caller's assertion about N's handle structure
        degrees: degrees to report (default 1..report_max_degree)
    """
    if degrees is None:
        degrees = range(1, settings.report_max_degree + 1)
    degrees = sorted(set(degrees))
    for d in degrees:
        _check_degree(d)

    rows = applicable_rows(source, target)
    report = DecisionReport(
        embeddable_at_all=embeddable_any_d(source, target),
        applicable_cases=[row.number for row in rows],
        guaranteed=DegreeTable.union(rows),
        obstructions=obstructions(source, target),
        assumes_no_13_handles=bool(n_has_no_13_handles),
    )

    for d in degrees:
        status = degree_status(source, target, d)
        report.degree_status[d] = status
        if d < MIN_COVERING_DEGREE:
            report.covering[d] = CoveringStatus.BELOW_THEOREM_RANGE
        elif status is DegreeStatus.IMPOSSIBLE:
            report.covering[d] = CoveringStatus.IMPOSSIBLE
        elif status is DegreeStatus.GUARANTEED and n_has_no_13_handles:
            report.covering[d] = CoveringStatus.GUARANTEED_COVERING
            report.branch_regularity[d] = BranchRegularity.for_degree(d)
        else:
            report.covering[d] = CoveringStatus.UNKNOWN

    logger.info(
        f"Report {source} -> {target}: rows {report.applicable_cases}, "
        f"guaranteed {report.guaranteed}"
    )
    return report


def least_covering_degree(source: FormInvariants, target: FormInvariants) -> Optional[int]:
    """Least guaranteed degree d >= 4 within max(12, report_max_degree), or None."""
    limit = max(12, settings.report_max_degree)
    for d in range(MIN_COVERING_DEGREE, limit + 1):
        if degree_status(source, target, d) is DegreeStatus.GUARANTEED:
            return d
    return None


def construct_embedding(source: FormInvariants, target: FormInvariants, d: int) -> Embedding:
    """
    Explicit d·I_N ↪ I_M between the Serre normal forms.

    Finite families are built at the least base degree b with d = h²·b and
    then multiplied by h.

    Raises:
        NotGuaranteedError: d is not a guaranteed degree
        AllocationInfeasibleError: the allocator ran out of room
    """
    status = degree_status(source, target, d)
    if status is not DegreeStatus.GUARANTEED:
        raise NotGuaranteedError(
            f"Degree {d} is {status.value} for {source} -> {target}; no construction applies",
            status=status,
        )

    rows = applicable_rows(source, target)
    family = DegreeTable.union(rows)
    base, h = family.decompose(d)
    row = next(r for r in rows if r.family.contains(base))

    embedding = SummandAllocator(source, target).allocate(row.number, base)
    return amplify(embedding, h)
