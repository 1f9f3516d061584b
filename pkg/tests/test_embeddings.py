"""Tests for embedding certificates, their algebra and the explicit constructions."""
import pytest

from src.tools.embeddings.application import constructors as build
from src.tools.embeddings.application.algebra import (
    amplify,
    compose,
    direct_sum_embed,
    identity_embedding,
    negate_adapter,
    rescaling,
    restrict,
    verify,
)
from src.tools.embeddings.domain.exceptions import (
    ChainMismatchError,
    DegreeMismatchError,
    DimensionMismatchError,
    EmbeddingError,
    FrameNotFoundError,
    UnsupportedDegreeError,
)
from src.tools.embeddings.domain.models import Embedding
from src.tools.embeddings.infrastructure.catalog import L2_ROWS, g2_matrix, g3_matrix
from src.tools.lattice_core.application.operations import scale
from src.tools.lattice_core.infrastructure.matrix_ops import congruence, identity, to_rows
from src.tools.standard_forms.application.services import diag_form, e8_form, hyperbolic_sum
from src.tools.standard_forms.domain.models import Sign
from tests.helpers import gram


def _gram_of(e: Embedding):
    """ᵗT·G_target·T as rows."""
    return to_rows(congruence(e.array, e.target.array))


class TestCatalogIdentities:
    def test_l2(self, e8):
        e = Embedding(degree=2, source=e8, target=diag_form(8, 0), matrix=L2_ROWS)
        assert verify(e)
        assert _gram_of(e) == scale(e8, 2).entries

    def test_g2_and_g3(self):
        i8 = identity(8)
        assert to_rows(congruence(g2_matrix(), i8)) == to_rows(2 * identity(8))
        assert to_rows(congruence(g3_matrix(), i8)) == to_rows(3 * identity(8))

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_l_matrix(self, e8, d):
        e = build.l_matrix(d)
        assert e.degree == d
        assert _gram_of(e) == scale(e8, d).entries

    def test_l_matrix_rejects_other_degrees(self):
        with pytest.raises(UnsupportedDegreeError):
            build.l_matrix(3)


class TestVerify:
    def test_wrong_degree_fails(self):
        e = Embedding(degree=2, source=gram((1,)), target=gram((1,)), matrix=((1,),))
        assert not verify(e)

    def test_identity(self, e8):
        assert verify(identity_embedding(e8))

    def test_shape_is_checked_on_construction(self):
        with pytest.raises(DimensionMismatchError):
            Embedding(degree=1, source=gram((1,)), target=diag_form(2, 0), matrix=((1,),))

    def test_degree_must_be_positive(self):
        with pytest.raises(EmbeddingError):
            Embedding(degree=0, source=gram((1,)), target=gram((1,)), matrix=((1,),))


class TestAlgebra:
    def test_compose(self):
        e = compose(build.h_into_h(2), build.h_into_h(3))
        assert e.degree == 6
        assert e.matrix == ((1, 0), (0, 6))
        assert _gram_of(e) == ((0, 6), (6, 0))

    def test_compose_rejects_broken_chains(self):
        with pytest.raises(ChainMismatchError):
            compose(build.h_into_h(2), build.hyperbolic_pair(1))

    def test_direct_sum_of_identities(self):
        e = direct_sum_embed(identity_embedding(gram((1,))), identity_embedding(gram((-1,))))
        assert e.matrix == ((1, 0), (0, 1))
        assert e.source == diag_form(1, 1)

    def test_direct_sum_of_hyperbolic_pairs(self):
        e = direct_sum_embed(build.hyperbolic_pair(1), build.hyperbolic_pair(1))
        assert e.degree == 2
        assert e.source.diagonal() == (1, -1, 1, -1)
        assert e.target == hyperbolic_sum(2)

    def test_direct_sum_rejects_mixed_degrees(self):
        with pytest.raises(DegreeMismatchError):
            direct_sum_embed(build.h_into_h(2), build.h_into_h(3))

    def test_amplify(self):
        e = amplify(identity_embedding(gram((1,))), 3)
        assert (e.degree, e.matrix) == (9, ((3,),))

    def test_amplify_hyperbolic_pair(self):
        e = amplify(build.hyperbolic_pair(1), 2)
        assert e.degree == 8
        assert e.columns() == ((2, 2), (2, -2))

    def test_negate_adapter(self):
        e = negate_adapter(build.l_matrix(2))
        assert e.source == e8_form(Sign.MINUS)
        assert e.target == diag_form(0, 8)
        assert verify(e)

    def test_restrict(self):
        e = restrict(build.five_pair_same_sign(Sign.PLUS), [1])
        assert e.source == gram((1,))
        assert e.columns() == ((2, -1),)

    def test_restrict_rejects_bad_columns(self):
        with pytest.raises(DimensionMismatchError):
            restrict(build.hyperbolic_pair(1), [0, 0])

    def test_rescaling(self):
        e = rescaling(gram((2, 1), (1, 2)), 3)
        assert e.target.entries == ((6, 3), (3, 6))
        assert verify(e)


class TestConstructors:
    @pytest.mark.parametrize("k", range(1, 51))
    def test_hyperbolic_pair(self, k):
        e = build.hyperbolic_pair(k)
        assert e.degree == 2 * k
        assert _gram_of(e) == ((2 * k, 0), (0, -2 * k))

    def test_hyperbolic_pair_k1_matrix(self):
        assert build.hyperbolic_pair(1).matrix == ((1, 1), (1, -1))

    def test_single_into_h(self):
        assert build.single_into_h(1, Sign.PLUS).columns() == ((1, 1),)
        e = build.single_into_h(3, Sign.MINUS)
        assert e.columns() == ((1, -3),)
        assert e.source.entries == ((-6,),)

    def test_single_generator_into_h(self):
        e = build.single_generator_into_h(2, "-")
        assert e.degree == 4
        assert e.source == gram((-1,))

    @pytest.mark.parametrize("d", [4, 8, 12])
    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_e8_into_hyperbolic(self, d, sign):
        e = build.e8_into_hyperbolic(d, sign)
        assert e.shape == (16, 8)
        assert e.source == e8_form(sign)
        assert e.target == hyperbolic_sum(8)
        assert _gram_of(e) == scale(e8_form(sign), d).entries

    def test_e8_into_hyperbolic_rejects_degree_2(self):
        with pytest.raises(UnsupportedDegreeError):
            build.e8_into_hyperbolic(2, Sign.PLUS)

    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_frame_in_e8(self, e8, k):
        frame = build.frame_in_e8(k)
        assert frame is not None
        f = Embedding(degree=k, source=diag_form(8, 0), target=e8, matrix=frame)
        assert _gram_of(f) == to_rows(k * identity(8))

    def test_no_unit_frame_in_e8(self):
        assert build.frame_in_e8(1) is None
        with pytest.raises(FrameNotFoundError):
            build.e8_frame_embedding(1)

    def test_frame_is_deterministic(self):
        build.frame_in_e8.cache_clear()
        first = build.frame_in_e8(2)
        build.frame_in_e8.cache_clear()
        assert build.frame_in_e8(2) == first

    @pytest.mark.parametrize("d", [4, 8, 12])
    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_e8_into_e8(self, d, sign):
        e = build.e8_into_e8(d, sign)
        assert e.source == e.target == e8_form(sign)
        assert _gram_of(e) == scale(e8_form(sign), d).entries

    def test_e8_into_e8_rejects_degree_6(self):
        with pytest.raises(UnsupportedDegreeError):
            build.e8_into_e8(6, Sign.PLUS)

    def test_h_into_h(self):
        assert build.h_into_h(1).matrix == ((1, 0), (0, 1))
        assert _gram_of(build.h_into_h(5)) == ((0, 5), (5, 0))

    @pytest.mark.parametrize("k", [1, 3])
    def test_two_k_h_into_diag(self, k):
        e = build.two_k_h_into_diag(k)
        assert _gram_of(e) == ((0, 2 * k), (2 * k, 0))

    def test_two_k_h_into_diag_k1_matrix(self):
        assert build.two_k_h_into_diag(1).matrix == ((1, 1), (1, -1))

    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_five_pair_same_sign(self, sign):
        e = build.five_pair_same_sign(sign)
        assert _gram_of(e) == ((5 * int(sign), 0), (0, 5 * int(sign)))

    def test_five_pair_mixed(self):
        e = build.five_pair_mixed()
        assert _gram_of(e) == ((5, 0), (0, -5))
        assert amplify(e, 2).degree == 20
