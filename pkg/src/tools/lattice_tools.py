"""Orchestrator for the lattice tools shared by the CLI and the MCP server."""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.shared.constants import ExitCodes, MIN_COVERING_DEGREE
from src.shared.mappers.lattice_mapper import LatticeMapper
from src.shared.utils.file_operations import FileOperations

from src.tools.decide.application.services import (
    construct_embedding,
    covering_report,
    least_covering_degree,
)
from src.tools.decide.domain.exceptions import (
    AllocationInfeasibleError,
    DecisionError,
    NotGuaranteedError,
)
from src.tools.decide.domain.models import CoveringStatus, DegreeStatus
from src.tools.embeddings.application.algebra import verify as verify_embedding
from src.tools.embeddings.domain.exceptions import (
    EmbeddingError,
    FrameNotFoundError,
    InvalidCertificateError,
)
from src.tools.lattice_core.application.operations import (
    determinant,
    invariants,
    is_unimodular,
    parity,
    signature,
)
from src.tools.lattice_core.domain.exceptions import LatticeError
from src.tools.oracle.application.search import (
    brute_force_embedding,
    enumerate_vectors_of_norm,
    orthogonal_frame_search,
)
from src.tools.oracle.domain.exceptions import OracleError
from src.tools.oracle.domain.models import SearchStatus
from src.tools.standard_forms.application.services import serre_layout, serre_normal_form
from src.tools.topology_io.application.services import (
    gram_from_framed_link,
    load_embedding,
    load_gram,
    load_invariants,
    load_link,
    preset,
    preset_link,
)
from src.tools.topology_io.domain.exceptions import TopologyInputError, UnknownPresetError

logger = logging.getLogger(__name__)

_INTERNAL_ERRORS = (AllocationInfeasibleError, FrameNotFoundError, InvalidCertificateError)
_INPUT_ERRORS = (
    TopologyInputError,
    LatticeError,
    OracleError,
    EmbeddingError,
    DecisionError,
    ValidationError,
)


def exit_code_for(error: Exception) -> int:
    """Exit code of a failed command: 3 for bad input, 4 for defects."""
    if isinstance(error, _INTERNAL_ERRORS):
        return ExitCodes.INTERNAL_ERROR
    if isinstance(error, _INPUT_ERRORS):
        return ExitCodes.INPUT_ERROR
    return ExitCodes.INTERNAL_ERROR


def _error_response(error: Exception, action: str) -> Dict[str, Any]:
    code = exit_code_for(error)
    message = getattr(error, "message", None) or str(error)
    if code == ExitCodes.INTERNAL_ERROR:
        logger.error(f"Internal error while trying to {action}: {message}", exc_info=True)
    else:
        logger.debug(f"Rejected input while trying to {action}: {message}")
    return {
        "success": False,
        "error": message,
        "error_type": type(error).__name__,
        "message": f"Failed to {action}: {message}",
        "exit_code": code,
    }


def _ok(data: Dict[str, Any], message: str, exit_code: int = ExitCodes.OK) -> Dict[str, Any]:
    return {"success": True, "data": data, "message": message, "exit_code": exit_code}


def _save(data: Dict[str, Any], output: Optional[str], command: str, response: Dict[str, Any]) -> None:
    if not output:
        return
    payload = {**data, "metadata": FileOperations.create_metadata(command)}
    path = FileOperations.save_json(payload, Path(output))
    response["output_file"] = str(path)
    logger.info(f"{command}: output saved to {path}")


class LatticeToolsOrchestrator:
    """
    Runs one command end to end and returns a response dictionary with
    ``success``, ``data``, ``message`` and ``exit_code``.
    """

    def classify(self, gram: str) -> Dict[str, Any]:
        """Rank, determinant, signature, parity and unimodularity of a Gram matrix."""
        try:
            g = load_gram(gram)
            det = determinant(g)
            inertia = signature(g)
            kind = parity(g)
            unimodular = abs(det) == 1
            data = LatticeMapper.classification_to_dict(g, det, inertia, kind.value, unimodular)
            if unimodular and inertia.n_zero == 0:
                data["invariants"] = LatticeMapper.invariants_to_dict(invariants(g))

            signature_text = f"({inertia.n_plus},{inertia.n_minus})"
            if inertia.n_zero:
                signature_text += f" with {inertia.n_zero} zero direction(s)"
            message = (
                f"rank {g.rank}, signature {signature_text}, parity {kind.value}, "
                + ("unimodular" if unimodular else f"not unimodular (det {det})")
            )
            return _ok(data, message)
        except Exception as e:
            return _error_response(e, "classify the form")

    def normal_form(self, form: str) -> Dict[str, Any]:
        """Serre normal form of the given invariants, Gram payload or preset."""
        try:
            inv = load_invariants(form)
            g = serre_normal_form(inv)
            data = {
                "invariants": LatticeMapper.invariants_to_dict(inv),
                **LatticeMapper.gram_to_dict(g),
                "layout": LatticeMapper.layout_to_dict(serre_layout(inv)),
            }
            return _ok(data, f"normal form of {inv}:\n{g}")
        except Exception as e:
            return _error_response(e, "build the normal form")

    def decide(
        self,
        source: str,
        target: str,
        degree: Optional[int] = None,
        assume_no_13_handles: bool = False,
    ) -> Dict[str, Any]:
        """
        Degree decision and covering report for N -> M.

        With a degree the exit code follows that degree's status
        (0 guaranteed, 1 impossible, 2 unknown); without one it is 0 when
        an embedding exists for some degree and 1 otherwise.
        """
        try:
            src = load_invariants(source)
            tgt = load_invariants(target)
            degrees = [degree] if degree is not None else None
            report = covering_report(src, tgt, assume_no_13_handles, degrees=degrees)
            data = LatticeMapper.report_to_dict(report)
            data["source"] = LatticeMapper.invariants_to_dict(src)
            data["target"] = LatticeMapper.invariants_to_dict(tgt)
            data["least_covering_degree"] = least_covering_degree(src, tgt)

            lines = []
            if degree is not None:
                status = report.degree_status[degree]
                lines.append(self._degree_line(report, degree))
                exit_code = {
                    DegreeStatus.GUARANTEED: ExitCodes.OK,
                    DegreeStatus.IMPOSSIBLE: ExitCodes.NEGATIVE,
                }.get(status, ExitCodes.UNDECIDED)
            else:
                exit_code = ExitCodes.OK if report.embeddable_at_all else ExitCodes.NEGATIVE
                header = f"embeddable: {'yes' if report.embeddable_at_all else 'no'}"
                if report.applicable_cases:
                    header += f" (table case {report.applicable_case})"
                lines.append(header)
                lines.append(f"guaranteed degrees: {report.guaranteed}")
                lines.extend(f"  d={d}: {self._degree_line(report, d)}" for d in sorted(report.covering))
            lines.extend(f"obstruction ({o.kind.value}): {o.detail}" for o in report.obstructions)
            return _ok(data, "\n".join(lines), exit_code)
        except Exception as e:
            return _error_response(e, "decide the embedding degrees")

    @staticmethod
    def _degree_line(report, d: int) -> str:
        covering = report.covering[d]
        if covering is CoveringStatus.GUARANTEED_COVERING:
            return f"{covering.value}, branch set: {report.branch_regularity[d].value.replace('_', ' ')}"
        text = f"{covering.value} (embedding {report.degree_status[d].value})"
        if (
            d >= MIN_COVERING_DEGREE
            and report.degree_status[d] is DegreeStatus.GUARANTEED
            and not report.assumes_no_13_handles
        ):
            text += "; covering needs N without 1- and 3-handles"
        return text

    def embed(self, source: str, target: str, degree: int, output: Optional[str] = None) -> Dict[str, Any]:
        """Explicit d·I_N ↪ I_M between Serre normal forms."""
        try:
            src = load_invariants(source)
            tgt = load_invariants(target)
            embedding = construct_embedding(src, tgt, degree)
            data = LatticeMapper.embedding_to_dict(embedding)
            response = _ok(
                data,
                f"degree-{degree} embedding {src} -> {tgt}: "
                f"{embedding.target.rank}x{embedding.source.rank} matrix",
            )
            _save(data, output, "embed", response)
            return response
        except NotGuaranteedError as e:
            code = ExitCodes.NEGATIVE if e.status is DegreeStatus.IMPOSSIBLE else ExitCodes.UNDECIDED
            return {
                "success": False,
                "error": e.message,
                "error_type": type(e).__name__,
                "message": e.message,
                "exit_code": code,
            }
        except Exception as e:
            return _error_response(e, "construct the embedding")

    def verify(self, embedding: str) -> Dict[str, Any]:
        """Check ᵗT·G_M·T = d·G_N for an embedding payload."""
        try:
            e = load_embedding(embedding)
            ok = verify_embedding(e)
            data = {"valid": ok, "degree": e.degree, "shape": list(e.shape)}
            return _ok(data, "OK" if ok else "FAIL", ExitCodes.OK if ok else ExitCodes.NEGATIVE)
        except Exception as e:
            return _error_response(e, "verify the embedding")

    def search_vectors(self, gram: str, norm: int, frame: Optional[int] = None) -> Dict[str, Any]:
        """Vectors of a given norm, or an orthogonal frame of them, in a definite form."""
        try:
            g = load_gram(gram)
            if frame is None:
                vectors: List = enumerate_vectors_of_norm(g, norm)
                message = f"{len(vectors)} vector(s) of norm {norm}"
            else:
                vectors = orthogonal_frame_search(g, norm, frame) or []
                message = (
                    f"frame of {frame} orthogonal norm-{norm} vector(s)"
                    if vectors else f"no frame of {frame} orthogonal norm-{norm} vector(s)"
                )
            data = LatticeMapper.vectors_to_dict(norm, vectors, frame is not None)
            exit_code = ExitCodes.OK if vectors else ExitCodes.NEGATIVE
            return _ok(data, message, exit_code)
        except Exception as e:
            return _error_response(e, "search for vectors")

    def search_embedding(
        self,
        source: str,
        target: str,
        degree: int,
        bound: Optional[int] = None,
        output: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Brute-force search for T with ᵗT·G_target·T = d·G_source."""
        try:
            src = load_gram(source)
            tgt = load_gram(target)
            result = brute_force_embedding(src, tgt, degree, bound=bound)
            data = LatticeMapper.search_to_dict(result)
            if result.status is SearchStatus.FOUND:
                exit_code = ExitCodes.OK
            elif result.status is SearchStatus.NONE:
                exit_code = ExitCodes.NEGATIVE
            else:
                exit_code = ExitCodes.UNDECIDED
            message = result.status.value
            if result.bound is not None:
                message += f" (coordinate bound {result.bound})"
            response = _ok(data, message, exit_code)
            if result.embedding is not None:
                _save(data["embedding"], output, "search", response)
            return response
        except Exception as e:
            return _error_response(e, "search for an embedding")

    def from_link(self, link: str) -> Dict[str, Any]:
        """Gram matrix (and invariants, when unimodular) of a framed link."""
        try:
            data_link = load_link(link)
            g = gram_from_framed_link(data_link)
            data = {**LatticeMapper.gram_to_dict(g), "link": LatticeMapper.link_to_dict(data_link)}
            message = f"intersection form: {g}"
            if is_unimodular(g) and signature(g).n_zero == 0:
                inv = invariants(g)
                data["invariants"] = LatticeMapper.invariants_to_dict(inv)
                message += f"\ninvariants: {inv}"
            return _ok(data, message)
        except Exception as e:
            return _error_response(e, "read the framed link")

    def preset(self, name: str) -> Dict[str, Any]:
        """Invariants of a named manifold or connected sum, with its link when known."""
        try:
            inv = preset(name)
            data = {"name": name, "invariants": LatticeMapper.invariants_to_dict(inv), "link": None}
            try:
                data["link"] = LatticeMapper.link_to_dict(preset_link(name))
            except UnknownPresetError:
                logger.debug(f"No framed link registered for {name!r}")
            return _ok(data, f"{name}: {inv}")
        except Exception as e:
            return _error_response(e, "resolve the preset")
