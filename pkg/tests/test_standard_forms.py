"""Tests for the standard lattices and Serre normal forms."""
import pytest

from src.tools.lattice_core.application.operations import determinant, invariants
from src.tools.lattice_core.domain.exceptions import (
    EmptyOddFormError,
    EvenSignatureNotMultipleOf8Error,
    InvalidInvariantsError,
)
from src.tools.standard_forms.application.services import (
    diag_form,
    e8_form,
    hyperbolic_sum,
    serre_layout,
    serre_normal_form,
    validate_invariants,
)
from src.tools.standard_forms.domain.models import Sign
from src.tools.standard_forms.infrastructure.catalog import E8_ROWS
from tests.helpers import K3, inv


class TestBuildingBlocks:
    def test_diag_form(self):
        assert diag_form(1, 0).entries == ((1,),)
        assert diag_form(2, 3).diagonal() == (1, 1, -1, -1, -1)

    def test_diag_form_rejects_negative_counts(self):
        with pytest.raises(InvalidInvariantsError):
            diag_form(-1, 2)

    def test_hyperbolic_sum(self):
        assert hyperbolic_sum(1).entries == ((0, 1), (1, 0))
        assert hyperbolic_sum(2).rank == 4
        assert hyperbolic_sum(0).rank == 0

    def test_e8_plus_is_the_catalog_matrix(self):
        assert e8_form(Sign.PLUS).entries == E8_ROWS
        assert determinant(e8_form("plus")) == 1

    def test_e8_minus(self):
        assert invariants(e8_form(Sign.MINUS)) == inv(0, 8, "even")
        assert e8_form(-1) == e8_form("-")

    def test_sign_coercion(self):
        assert Sign.of("minus") is Sign.MINUS
        assert Sign.of(1) is Sign.PLUS
        with pytest.raises(ValueError):
            Sign.of("sideways")


class TestValidateInvariants:
    def test_k3_is_valid(self):
        validate_invariants(K3)

    def test_odd_form_is_valid(self):
        validate_invariants(inv(2, 3, "odd"))

    def test_even_signature_must_be_multiple_of_8(self):
        with pytest.raises(EvenSignatureNotMultipleOf8Error):
            validate_invariants(inv(2, 3, "even"))

    def test_empty_even_form_is_valid(self):
        validate_invariants(inv(0, 0, "even"))
        assert serre_normal_form(inv(0, 0, "even")).rank == 0

    def test_empty_odd_form_is_rejected(self):
        with pytest.raises(EmptyOddFormError):
            validate_invariants(inv(0, 0, "odd"))


class TestSerreNormalForm:
    def test_k3(self):
        g = serre_normal_form(K3)
        assert g.rank == 22
        assert g.submatrix(range(8)) == e8_form(Sign.MINUS)
        assert g.submatrix(range(8, 16)) == e8_form(Sign.MINUS)
        assert g.submatrix(range(16, 22)) == hyperbolic_sum(3)

    def test_hyperbolic(self):
        assert serre_normal_form(inv(1, 1, "even")) == hyperbolic_sum(1)

    @pytest.mark.parametrize("h", [0, 1, 3])
    def test_zero_signature_even_forms_are_hyperbolic_sums(self, h):
        inv_h = inv(h, h, "even")
        assert serre_layout(inv_h).e8_sign is None
        assert serre_normal_form(inv_h) == hyperbolic_sum(h)
        assert serre_normal_form(inv_h).rank == 2 * h

    def test_odd(self):
        assert serre_normal_form(inv(2, 1, "odd")) == diag_form(2, 1)

    @pytest.mark.parametrize("b2_plus, b2_minus, parity", [
        (3, 19, "even"), (8, 0, "even"), (0, 16, "even"), (4, 4, "even"),
        (11, 3, "even"), (1, 0, "odd"), (4, 20, "odd"), (0, 5, "odd"),
    ])
    def test_normal_form_has_the_requested_invariants(self, b2_plus, b2_minus, parity):
        target = inv(b2_plus, b2_minus, parity)
        assert invariants(serre_normal_form(target)) == target

    def test_layout_of_k3(self):
        layout = serre_layout(K3)
        assert layout.e8_sign is Sign.MINUS
        assert layout.e8_blocks == (tuple(range(8)), tuple(range(8, 16)))
        assert layout.hyperbolic_blocks == ((16, 17), (18, 19), (20, 21))
        assert not layout.is_diagonal

    def test_layout_of_odd_form(self):
        layout = serre_layout(inv(2, 3, "odd"))
        assert layout.positive_slots == (0, 1)
        assert layout.negative_slots == (2, 3, 4)
        assert layout.is_diagonal
