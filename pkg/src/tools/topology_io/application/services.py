"""Framed links, presets and payload resolution."""
import logging
from typing import Any, Mapping

from pydantic import ValidationError

from src.shared.constants import PayloadKeys
from src.tools.embeddings.domain.models import Embedding
from src.tools.lattice_core.application.operations import invariants
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix, Parity
from src.tools.lattice_core.infrastructure.matrix_ops import block_diagonal, object_array, to_rows
from ..domain.exceptions import AsymmetricLinkingError, PayloadError
from ..domain.models import FramedLinkData
from ..infrastructure.loader import PayloadLoader
from ..infrastructure.payloads import (
    EmbeddingPayload,
    FramedLinkPayload,
    InvariantsPayload,
    LatticePayload,
)
from ..infrastructure.presets import registry

logger = logging.getLogger(__name__)


def gram_from_framed_link(data: FramedLinkData) -> GramMatrix:
    """
    Intersection form of the 2-handlebody: a_ii is the framing of L_i and
    a_ij = lk(L_i, L_j).

    Raises:
        AsymmetricLinkingError: lk(L_i, L_j) != lk(L_j, L_i)
    """
    n = data.n
    for i in range(n):
        for j in range(i + 1, n):
            if data.linking[i][j] != data.linking[j][i]:
                raise AsymmetricLinkingError(
                    f"lk(L_{i + 1}, L_{j + 1}) = {data.linking[i][j]} but "
                    f"lk(L_{j + 1}, L_{i + 1}) = {data.linking[j][i]}"
                )
    return GramMatrix(tuple(
        tuple(data.framings[i] if i == j else data.linking[i][j] for j in range(n))
        for i in range(n)
    ))


def connected_sum(*parts: FormInvariants) -> FormInvariants:
    """b2± add up; the sum is odd iff some summand is odd."""
    odd = any(not p.is_even for p in parts)
    return FormInvariants(
        sum(p.b2_plus for p in parts),
        sum(p.b2_minus for p in parts),
        Parity.ODD if odd else Parity.EVEN,
    )


def preset(name: str) -> FormInvariants:
    """Invariants of a registered manifold or a connected sum of them."""
    parts = [registry.invariants(term) for count, term in registry.parse(name) for _ in range(count)]
    result = parts[0] if len(parts) == 1 else connected_sum(*parts)
    logger.debug(f"Preset {name!r} -> {result}")
    return result


def preset_link(name: str) -> FramedLinkData:
    """
    Framed link of a registered manifold; connected sums give the split
    union of the summands' links.
    """
    links = [registry.link(term) for count, term in registry.parse(name) for _ in range(count)]
    framings = tuple(f for link in links for f in link.framings)
    blocks = [object_array(link.linking, link.n, link.n) for link in links]
    return FramedLinkData(framings=framings, linking=to_rows(block_diagonal(*blocks)))


def preset_names():
    return registry.names


# -- payload resolution --------------------------------------------------

_loader = PayloadLoader()


def _validated(model, data: Any, what: str):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise PayloadError(f"Invalid {what} payload: {e}") from e


def _as_mapping(data: Any, argument: str) -> Mapping:
    if isinstance(data, list):
        return {PayloadKeys.GRAM: data}
    if not isinstance(data, Mapping):
        raise PayloadError(f"Expected a JSON/YAML object in {argument!r}")
    return data


def load_gram(argument: str) -> GramMatrix:
    """Gram matrix from ``{"gram": ...}``, a bare matrix, or a framed-link payload."""
    data = _loader.load(argument)
    if isinstance(data, str):
        raise PayloadError(f"Expected a Gram matrix payload, got {argument!r}")
    data = _as_mapping(data, argument)
    if PayloadKeys.FRAMINGS in data:
        return gram_from_framed_link(_validated(FramedLinkPayload, data, "framed link").to_domain())
    return _validated(LatticePayload, data, "lattice").to_domain()


def load_link(argument: str) -> FramedLinkData:
    """Framed link from a payload or a preset expression."""
    data = _loader.load(argument)
    if isinstance(data, str):
        return preset_link(data)
    if not isinstance(data, Mapping):
        raise PayloadError(f"Expected a framed-link object in {argument!r}")
    return _validated(FramedLinkPayload, data, "framed link").to_domain()


def load_invariants(argument: str) -> FormInvariants:
    """
    Invariants from an invariants payload, a Gram or framed-link payload
    (classified), or a preset expression.
    """
    data = _loader.load(argument)
    if isinstance(data, str):
        return preset(data)
    data = _as_mapping(data, argument)
    if PayloadKeys.B2_PLUS in data or PayloadKeys.PARITY in data:
        return _validated(InvariantsPayload, data, "invariants").to_domain()
    if PayloadKeys.FRAMINGS in data:
        link = _validated(FramedLinkPayload, data, "framed link").to_domain()
        return invariants(gram_from_framed_link(link))
    if PayloadKeys.GRAM in data:
        return invariants(_validated(LatticePayload, data, "lattice").to_domain())
    raise PayloadError(
        f"Cannot read a form from {argument!r}: expected one of "
        f"'{PayloadKeys.GRAM}', '{PayloadKeys.FRAMINGS}' or '{PayloadKeys.B2_PLUS}'"
    )


def load_embedding(argument: str) -> Embedding:
    """Embedding certificate from a payload."""
    data = _loader.load(argument)
    if isinstance(data, str):
        raise PayloadError(f"Expected an embedding payload, got {argument!r}")
    if not isinstance(data, Mapping):
        raise PayloadError(f"Expected an embedding object in {argument!r}")
    return _validated(EmbeddingPayload, data, "embedding").to_domain()


__all__ = [
    "connected_sum",
    "gram_from_framed_link",
    "load_embedding",
    "load_gram",
    "load_invariants",
    "load_link",
    "preset",
    "preset_link",
    "preset_names",
]
