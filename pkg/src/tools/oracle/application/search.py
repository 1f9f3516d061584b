"""
Oracle operations: norm-k vectors, orthogonal frames and brute-force
embedding search.

These routines are independent of the explicit constructions and are
used to cross-check them.
"""
import itertools
import logging
from typing import Dict, List, Optional, Tuple

from src.shared.config import settings
from src.tools.embeddings.application.algebra import certified
from src.tools.embeddings.domain.models import Embedding
from src.tools.lattice_core.application.operations import negate, signature
from src.tools.lattice_core.domain.models import GramMatrix
from ..domain.exceptions import NotPositiveDefiniteError, OracleError
from ..domain.models import SearchResult, SearchStatus
from ..infrastructure.backtracking import ColumnBacktracker
from ..infrastructure.enumerator import FinckePohstEnumerator

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise OracleError(f"{name} must be a positive integer, got {value!r}")


def _require_positive_definite(g: GramMatrix) -> None:
    inertia = signature(g)
    if inertia.n_plus != g.rank:
        raise NotPositiveDefiniteError(
            f"Form of rank {g.rank} is not positive definite: inertia {tuple(inertia)}"
        )


def enumerate_vectors_of_norm(g: GramMatrix, k: int) -> List[Vector]:
    """
    Every integer vector v with ᵗv·G·v = k, both signs listed, sorted
    lexicographically.

    Raises:
        NotPositiveDefiniteError: G is not positive definite
    """
    _positive("k", k)
    _require_positive_definite(g)
    return FinckePohstEnumerator(g).vectors_of_norm(k)


def _leading_positive(v: Vector) -> bool:
    return next((x > 0 for x in v if x != 0), False)


def orthogonal_frame_search(g: GramMatrix, k: int, m: int) -> Optional[List[Vector]]:
    """
    m pairwise orthogonal vectors of norm k, or None if there are none.

    Frame vectors are only sought among vectors whose first nonzero
    coordinate is positive (negating a frame vector gives another frame).
    The answer is the least such frame in lexicographic candidate order.
    """
    _positive("k", k)
    _positive("m", m)
    if m > g.rank:
        raise OracleError(f"Cannot fit {m} orthogonal vectors in rank {g.rank}")
    vectors = [v for v in enumerate_vectors_of_norm(g, k) if _leading_positive(v)]
    if len(vectors) < m:
        return None
    backtracker = ColumnBacktracker(g)
    required = [[0] * m for _ in range(m)]
    frame = backtracker.solve([vectors] * m, required, increasing=True)
    logger.debug(
        f"Frame search (norm {k}, size {m}) over {len(vectors)} candidate(s): "
        f"{'found' if frame else 'none'} after {backtracker.nodes} node(s)"
    )
    return frame


def _embedding_from_columns(source: GramMatrix, target: GramMatrix, d: int, columns) -> Embedding:
    rows = tuple(tuple(col[i] for col in columns) for i in range(target.rank))
    return certified(Embedding(degree=d, source=source, target=target, matrix=rows), "brute_force_embedding")


def _solve(target: GramMatrix, source: GramMatrix, d: int, candidates) -> Tuple[Optional[list], int]:
    required = [[d * x for x in row] for row in source.entries]
    backtracker = ColumnBacktracker(target)
    columns = backtracker.solve(candidates, required)
    return columns, backtracker.nodes


def _definite_search(source: GramMatrix, target: GramMatrix, d: int) -> SearchResult:
    inertia = signature(target)
    flip = target.rank > 0 and inertia.n_minus == target.rank
    g = negate(target) if flip else target
    src = negate(source) if flip else source

    enumerator = FinckePohstEnumerator(g)
    cache: Dict[int, List[Vector]] = {}
    candidates = []
    for j in range(src.rank):
        norm = d * src.entries[j][j]
        if norm < 0:
            return SearchResult(SearchStatus.NONE)
        if norm not in cache:
            cache[norm] = [tuple([0] * g.rank)] if norm == 0 else enumerator.vectors_of_norm(norm)
        candidates.append(cache[norm])
        if not cache[norm]:
            return SearchResult(SearchStatus.NONE)

    columns, nodes = _solve(g, src, d, candidates)
    if columns is None:
        return SearchResult(SearchStatus.NONE, nodes=nodes)
    return SearchResult(
        SearchStatus.FOUND,
        embedding=_embedding_from_columns(source, target, d, columns),
        nodes=nodes,
    )


def _box_search(
    source: GramMatrix, target: GramMatrix, d: int, bound: int, max_box_points: int
) -> SearchResult:
    m = target.rank
    points = (2 * bound + 1) ** m
    if points > max_box_points:
        logger.warning(
            f"Box search refused: {points} points at bound {bound} exceeds {max_box_points}"
        )
        return SearchResult(SearchStatus.REFUSED, exhaustive=False, bound=bound)

    wanted = {d * source.entries[j][j] for j in range(source.rank)}
    buckets: Dict[int, List[Vector]] = {norm: [] for norm in wanted}
    rows = target.entries
    for x in itertools.product(range(-bound, bound + 1), repeat=m):
        norm = sum(x[i] * sum(rows[i][j] * x[j] for j in range(m)) for i in range(m) if x[i])
        if norm in buckets:
            buckets[norm].append(x)

    candidates = [buckets[d * source.entries[j][j]] for j in range(source.rank)]
    if any(not c for c in candidates):
        return SearchResult(SearchStatus.BOUNDED_NONE, exhaustive=False, bound=bound)
    columns, nodes = _solve(target, source, d, candidates)
    if columns is None:
        return SearchResult(SearchStatus.BOUNDED_NONE, exhaustive=False, bound=bound, nodes=nodes)
    return SearchResult(
        SearchStatus.FOUND,
        embedding=_embedding_from_columns(source, target, d, columns),
        exhaustive=False,
        bound=bound,
        nodes=nodes,
    )


def brute_force_embedding(
    source: GramMatrix,
    target: GramMatrix,
    d: int,
    bound: Optional[int] = None,
    max_box_points: Optional[int] = None,
) -> SearchResult:
    """
    Search for T with ᵗT·G_target·T = d·G_source.

    Definite targets (either sign) are decided exactly. Indefinite or
    degenerate targets are searched in the box |x_i| <= bound, and a
    negative answer there is only BOUNDED_NONE.
    """
    _positive("d", d)
    if source.rank == 0:
        empty = Embedding(degree=d, source=source, target=target, matrix=tuple(() for _ in range(target.rank)))
        return SearchResult(SearchStatus.FOUND, embedding=empty)

    inertia = signature(target)
    if inertia.n_plus == target.rank or inertia.n_minus == target.rank:
        result = _definite_search(source, target, d)
    else:
        bound = settings.oracle_default_bound if bound is None else bound
        _positive("bound", bound)
        limit = settings.oracle_max_box_points if max_box_points is None else max_box_points
        result = _box_search(source, target, d, bound, limit)

    logger.info(
        f"Brute-force search rank {source.rank} -> {target.rank} at degree {d}: {result.status.value}"
    )
    return result
