"""Decide domain layer."""
from .models import (
    BranchRegularity,
    CoveringStatus,
    DecisionReport,
    DegreeFamily,
    DegreeStatus,
    FamilyKind,
    Obstruction,
    ObstructionKind,
    TableRow,
)
from .exceptions import (
    DecisionError,
    InvalidDegreeError,
    NotGuaranteedError,
    AllocationInfeasibleError,
)

__all__ = [
    "BranchRegularity",
    "CoveringStatus",
    "DecisionReport",
    "DegreeFamily",
    "DegreeStatus",
    "FamilyKind",
    "Obstruction",
    "ObstructionKind",
    "TableRow",
    "DecisionError",
    "InvalidDegreeError",
    "NotGuaranteedError",
    "AllocationInfeasibleError",
]
