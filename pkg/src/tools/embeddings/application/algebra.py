"""Algebra of embedding certificates: verify, compose, sum, amplify, restrict."""
import logging
from typing import Sequence

from src.tools.lattice_core.application.operations import direct_sum_all, negate, scale
from src.tools.lattice_core.domain.models import GramMatrix
from src.tools.lattice_core.infrastructure.matrix_ops import (
    block_diagonal,
    congruence,
    identity,
    matmul,
    to_rows,
)
from ..domain.exceptions import (
    ChainMismatchError,
    DegreeMismatchError,
    DimensionMismatchError,
    EmbeddingError,
    InvalidCertificateError,
)
from ..domain.models import Embedding

logger = logging.getLogger(__name__)


def verify(e: Embedding) -> bool:
    """True iff ᵗT·G_target·T = d·G_source exactly."""
    m, n = e.shape
    t = e.array
    if t.shape != (m, n):
        raise DimensionMismatchError(f"Matrix shape {t.shape} does not match ({m}, {n})")
    lhs = congruence(t, e.target.array)
    d = e.degree
    return all(
        lhs[i, j] == d * e.source.entries[i][j]
        for i in range(n) for j in range(n)
    )


def certified(e: Embedding, construction: str) -> Embedding:
    """Return e after checking its defining identity."""
    if not verify(e):
        raise InvalidCertificateError(
            f"{construction} produced a matrix that is not a degree-{e.degree} embedding"
        )
    return e


def compose(inner: Embedding, outer: Embedding) -> Embedding:
    """
    Chain N → P → M. The result has matrix outer·inner and degree d1·d2.

    Raises:
        ChainMismatchError: inner.target differs from outer.source
    """
    if inner.target != outer.source:
        raise ChainMismatchError(
            f"Cannot compose: inner target (rank {inner.target.rank}) "
            f"is not the outer source (rank {outer.source.rank})"
        )
    matrix = matmul(outer.array, inner.array)
    result = Embedding(
        degree=inner.degree * outer.degree,
        source=inner.source,
        target=outer.target,
        matrix=to_rows(matrix),
    )
    return certified(result, "compose")


def direct_sum_embed(*parts: Embedding) -> Embedding:
    """
    Block-diagonal sum of embeddings of a common degree.

    Raises:
        DegreeMismatchError: degrees differ
    """
    if not parts:
        raise EmbeddingError("direct_sum_embed needs at least one embedding")
    degrees = {e.degree for e in parts}
    if len(degrees) != 1:
        raise DegreeMismatchError(f"Cannot sum embeddings of degrees {sorted(degrees)}")
    result = Embedding(
        degree=parts[0].degree,
        source=direct_sum_all(*(e.source for e in parts)),
        target=direct_sum_all(*(e.target for e in parts)),
        matrix=to_rows(block_diagonal(*(e.array for e in parts))),
    )
    return certified(result, "direct_sum_embed")


def amplify(e: Embedding, h: int) -> Embedding:
    """Multiply T by h, turning a degree-d certificate into degree h²·d."""
    if isinstance(h, bool) or not isinstance(h, int) or h < 1:
        raise EmbeddingError(f"Amplification factor must be a positive integer, got {h!r}")
    if h == 1:
        return e
    result = Embedding(
        degree=h * h * e.degree,
        source=e.source,
        target=e.target,
        matrix=tuple(tuple(h * x for x in row) for row in e.matrix),
    )
    return certified(result, "amplify")


def negate_adapter(e: Embedding) -> Embedding:
    """Same matrix between the negated source and target forms."""
    result = Embedding(
        degree=e.degree,
        source=negate(e.source),
        target=negate(e.target),
        matrix=e.matrix,
    )
    return certified(result, "negate_adapter")


def restrict(e: Embedding, columns: Sequence[int]) -> Embedding:
    """Keep only the given source basis vectors (in the given order)."""
    columns = list(columns)
    n = e.source.rank
    if any(not 0 <= j < n for j in columns) or len(set(columns)) != len(columns):
        raise DimensionMismatchError(f"Invalid column selection {columns} for source rank {n}")
    result = Embedding(
        degree=e.degree,
        source=e.source.submatrix(columns),
        target=e.target,
        matrix=tuple(tuple(row[j] for j in columns) for row in e.matrix),
    )
    return certified(result, "restrict")


def identity_embedding(g: GramMatrix) -> Embedding:
    """Degree-1 identity certificate G ↪ G."""
    return Embedding(degree=1, source=g, target=g, matrix=to_rows(identity(g.rank)))


def rescaling(g: GramMatrix, d: int) -> Embedding:
    """Degree-d certificate G ↪ d·G with T = I."""
    return Embedding(degree=d, source=g, target=scale(g, d), matrix=to_rows(identity(g.rank)))
