"""Mappers for converting lattice, embedding and decision models to JSON-serializable dictionaries."""
from typing import Any, Dict, List, Optional

from ...tools.decide.domain.models import DecisionReport, DegreeFamily, FamilyKind, Obstruction
from ...tools.embeddings.domain.models import Embedding
from ...tools.lattice_core.domain.models import FormInvariants, GramMatrix
from ...tools.oracle.domain.models import SearchResult
from ...tools.standard_forms.domain.models import FormLayout
from ...tools.topology_io.domain.models import FramedLinkData
from ..constants import NODAL_DEGREE, PayloadKeys


def _matrix(rows) -> List[List[int]]:
    return [list(row) for row in rows]


class LatticeMapper:
    """Mapper for converting domain models to dictionaries."""

    @staticmethod
    def gram_to_dict(gram: GramMatrix) -> Dict[str, Any]:
        return {PayloadKeys.GRAM: _matrix(gram.entries)}

    @staticmethod
    def invariants_to_dict(inv: FormInvariants) -> Dict[str, Any]:
        return {
            PayloadKeys.B2_PLUS: inv.b2_plus,
            PayloadKeys.B2_MINUS: inv.b2_minus,
            PayloadKeys.PARITY: inv.parity.value,
        }

    @staticmethod
    def classification_to_dict(
        gram: GramMatrix,
        determinant: int,
        inertia: tuple,
        parity: str,
        unimodular: bool,
    ) -> Dict[str, Any]:
        """Summary of a Gram matrix as printed by ``classify``."""
        n_plus, n_zero, n_minus = inertia
        return {
            "rank": gram.rank,
            "determinant": determinant,
            "signature": {"b2_plus": n_plus, "b2_zero": n_zero, "b2_minus": n_minus},
            "sigma": n_plus - n_minus,
            "parity": parity,
            "unimodular": unimodular,
        }

    @staticmethod
    def layout_to_dict(layout: FormLayout) -> Dict[str, Any]:
        return {
            "rank": layout.rank,
            "positive_slots": list(layout.positive_slots),
            "negative_slots": list(layout.negative_slots),
            "e8_blocks": [list(block) for block in layout.e8_blocks],
            "e8_sign": layout.e8_sign.label if layout.e8_sign is not None else None,
            "hyperbolic_blocks": [list(block) for block in layout.hyperbolic_blocks],
        }

    @staticmethod
    def embedding_to_dict(embedding: Embedding) -> Dict[str, Any]:
        """Embedding payload, readable back by ``verify``."""
        return {
            PayloadKeys.DEGREE: embedding.degree,
            PayloadKeys.SOURCE_GRAM: _matrix(embedding.source.entries),
            PayloadKeys.TARGET_GRAM: _matrix(embedding.target.entries),
            PayloadKeys.MATRIX: _matrix(embedding.matrix),
        }

    @staticmethod
    def family_to_dict(family: DegreeFamily) -> Dict[str, Any]:
        base = list(family.base) if family.kind is FamilyKind.SQUARE_CLOSURE else []
        return {"kind": family.kind.value, "base": base, "description": str(family)}

    @staticmethod
    def obstruction_to_dict(obstruction: Obstruction) -> Dict[str, Any]:
        return {
            "kind": obstruction.kind.value,
            "detail": obstruction.detail,
            "rules_out": "odd degrees" if obstruction.kind.value == "parity" else "all degrees",
        }

    @staticmethod
    def report_to_dict(report: DecisionReport) -> Dict[str, Any]:
        """
        DecisionReport JSON. ``branch_regularity`` states the rule; the
        per-degree regularity of guaranteed coverings is under ``regularity``.
        """
        return {
            "embeddable": report.embeddable_at_all,
            "case": report.applicable_case,
            "cases": list(report.applicable_cases),
            "guaranteed": LatticeMapper.family_to_dict(report.guaranteed),
            "obstructions": [LatticeMapper.obstruction_to_dict(o) for o in report.obstructions],
            "degree_status": {str(d): s.value for d, s in report.degree_status.items()},
            "covering": {str(d): s.value for d, s in report.covering.items()},
            "branch_regularity": {str(NODAL_DEGREE): "nodal", f"{NODAL_DEGREE + 1}+": "locally_flat"},
            "regularity": {str(d): r.value for d, r in report.branch_regularity.items()},
            "assumes_no_1_3_handles": report.assumes_no_13_handles,
            "convention": "certificates are stated between Serre normal forms",
        }

    @staticmethod
    def search_to_dict(result: SearchResult) -> Dict[str, Any]:
        return {
            "status": result.status.value,
            "exhaustive": result.exhaustive,
            "bound": result.bound,
            "nodes": result.nodes,
            "embedding": (
                LatticeMapper.embedding_to_dict(result.embedding)
                if result.embedding is not None else None
            ),
        }

    @staticmethod
    def link_to_dict(link: FramedLinkData) -> Dict[str, Any]:
        return {PayloadKeys.FRAMINGS: list(link.framings), PayloadKeys.LINKING: _matrix(link.linking)}

    @staticmethod
    def vectors_to_dict(norm: int, vectors, frame: Optional[bool] = False) -> Dict[str, Any]:
        return {
            "norm": norm,
            "frame": bool(frame),
            "count": len(vectors),
            "vectors": [list(v) for v in vectors],
        }
