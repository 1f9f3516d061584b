"""
Explicit embeddings between the standard lattices.

Every constructor checks its own result with ``verify`` and raises
InvalidCertificateError if the identity fails.
"""
import logging
from functools import lru_cache
from typing import Optional, Union

from src.tools.lattice_core.domain.models import GramMatrix, Rows
from src.tools.standard_forms.application.services import diag_form, e8_form, hyperbolic_sum
from src.tools.standard_forms.domain.models import Sign
from src.tools.standard_forms.infrastructure.catalog import HYPERBOLIC_ROWS
from src.tools.oracle.application.search import orthogonal_frame_search
from ..domain.exceptions import EmbeddingError, FrameNotFoundError, UnsupportedDegreeError
from ..domain.models import Embedding
from ..infrastructure.catalog import l_rows
from .algebra import certified, compose, negate_adapter, rescaling

logger = logging.getLogger(__name__)

SignLike = Union[Sign, int, str]

L_DEGREES = (2, 4, 6)
E8_DEGREES = (4, 8, 12)


def _positive(name: str, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise EmbeddingError(f"{name} must be a positive integer, got {k!r}")


def _h() -> GramMatrix:
    return GramMatrix(HYPERBOLIC_ROWS)


def _from_columns(*columns) -> Rows:
    return tuple(zip(*columns)) if columns else ()


def hyperbolic_pair(k: int) -> Embedding:
    """⟨2k⟩ ⊕ ⟨-2k⟩ ↪ H through e1 + k·e2 and e1 - k·e2."""
    _positive("k", k)
    e = Embedding(
        degree=2 * k,
        source=diag_form(1, 1),
        target=_h(),
        matrix=_from_columns((1, k), (1, -k)),
    )
    return certified(e, f"hyperbolic_pair({k})")


def single_into_h(k: int, sign: SignLike) -> Embedding:
    """Degree-1 certificate ⟨±2k⟩ ↪ H, column (1, ±k)."""
    _positive("k", k)
    s = int(Sign.of(sign))
    e = Embedding(
        degree=1,
        source=GramMatrix(((s * 2 * k,),)),
        target=_h(),
        matrix=_from_columns((1, s * k)),
    )
    return certified(e, f"single_into_h({k}, {s:+d})")


def single_generator_into_h(k: int, sign: SignLike) -> Embedding:
    """Degree-2k certificate ⟨±1⟩ ↪ H (rescale, then single_into_h)."""
    s = int(Sign.of(sign))
    return compose(rescaling(GramMatrix(((s,),)), 2 * k), single_into_h(k, s))


def l_matrix(d: int) -> Embedding:
    """d·E8 ↪ ⟨1⟩⁸ for d in {2, 4, 6}."""
    if d not in L_DEGREES:
        raise UnsupportedDegreeError(f"l_matrix supports degrees {L_DEGREES}, got {d}")
    e = Embedding(degree=d, source=e8_form(Sign.PLUS), target=diag_form(8, 0), matrix=l_rows(d))
    return certified(e, f"l_matrix({d})")


def _doubled_frame_into_hyperbolic(sign: Sign) -> Embedding:
    """2·(±⟨1⟩⁸) ↪ ⊕8 H sending e_i to (1, ±1) in the i-th H."""
    columns = []
    for i in range(8):
        col = [0] * 16
        col[2 * i] = 1
        col[2 * i + 1] = int(sign)
        columns.append(col)
    source = diag_form(8, 0) if sign is Sign.PLUS else diag_form(0, 8)
    e = Embedding(degree=2, source=source, target=hyperbolic_sum(8), matrix=_from_columns(*columns))
    return certified(e, "doubled frame into 8H")


def e8_into_hyperbolic(d: int, sign: SignLike) -> Embedding:
    """d·(±E8) ↪ ⊕8 H for d in {4, 8, 12}."""
    if d not in E8_DEGREES:
        raise UnsupportedDegreeError(f"e8_into_hyperbolic supports degrees {E8_DEGREES}, got {d}")
    s = Sign.of(sign)
    inner = l_matrix(d // 2)
    if s is Sign.MINUS:
        inner = negate_adapter(inner)
    return compose(inner, _doubled_frame_into_hyperbolic(s))


@lru_cache(maxsize=None)
def frame_in_e8(k: int) -> Optional[Rows]:
    """
    Eight pairwise orthogonal norm-k vectors of E8, as the columns of an 8x8
    matrix F with ᵗF·E8·F = k·I8, or None when no such frame exists.
    """
    _positive("k", k)
    frame = orthogonal_frame_search(e8_form(Sign.PLUS), k, 8)
    if frame is None:
        logger.info(f"No norm-{k} orthogonal frame in E8")
        return None
    return _from_columns(*frame)


def e8_frame_embedding(k: int, sign: SignLike = Sign.PLUS) -> Embedding:
    """k·(±⟨1⟩⁸) ↪ ±E8 through frame_in_e8(k)."""
    frame = frame_in_e8(k)
    if frame is None:
        raise FrameNotFoundError(f"E8 has no orthogonal frame of norm {k}")
    s = Sign.of(sign)
    source = diag_form(8, 0) if s is Sign.PLUS else diag_form(0, 8)
    e = Embedding(degree=k, source=source, target=e8_form(s), matrix=frame)
    return certified(e, f"e8_frame_embedding({k}, {s.label})")


def e8_into_e8(d: int, sign: SignLike) -> Embedding:
    """d·(±E8) ↪ ±E8 for d in {4, 8, 12}: 2·E8 ↪ ⟨1⟩⁸, then (d/2)·⟨1⟩⁸ ↪ E8."""
    if d not in E8_DEGREES:
        raise UnsupportedDegreeError(f"e8_into_e8 supports degrees {E8_DEGREES}, got {d}")
    e = compose(l_matrix(2), e8_frame_embedding(d // 2, Sign.PLUS))
    if Sign.of(sign) is Sign.MINUS:
        e = negate_adapter(e)
    return e


def h_into_h(k: int) -> Embedding:
    """k·H ↪ H, T = [[1, 0], [0, k]]."""
    _positive("k", k)
    e = Embedding(degree=k, source=_h(), target=_h(), matrix=((1, 0), (0, k)))
    return certified(e, f"h_into_h({k})")


def two_k_h_into_diag(k: int) -> Embedding:
    """2k·H ↪ ⟨1⟩ ⊕ ⟨-1⟩ through the isotropic vectors (1, 1) and (k, -k)."""
    _positive("k", k)
    e = Embedding(
        degree=2 * k,
        source=_h(),
        target=diag_form(1, 1),
        matrix=_from_columns((1, 1), (k, -k)),
    )
    return certified(e, f"two_k_h_into_diag({k})")


def five_pair_same_sign(sign: SignLike) -> Embedding:
    """5·(±⟨1⟩²) ↪ ±⟨1⟩², columns (1, 2) and (2, -1)."""
    s = Sign.of(sign)
    g = diag_form(2, 0) if s is Sign.PLUS else diag_form(0, 2)
    e = Embedding(degree=5, source=g, target=g, matrix=_from_columns((1, 2), (2, -1)))
    return certified(e, f"five_pair_same_sign({s.label})")


def five_pair_mixed() -> Embedding:
    """5·(⟨1⟩ ⊕ ⟨-1⟩) ↪ ⟨1⟩ ⊕ ⟨-1⟩, columns (3, 2) and (2, 3)."""
    g = diag_form(1, 1)
    e = Embedding(degree=5, source=g, target=g, matrix=_from_columns((3, 2), (2, 3)))
    return certified(e, "five_pair_mixed")
