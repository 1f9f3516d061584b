"""Tests for Gram matrices, exact determinants, inertia and invariants."""
import random

import pytest
import sympy

from src.tools.lattice_core.application.operations import (
    determinant,
    direct_sum,
    direct_sum_all,
    invariants,
    is_unimodular,
    negate,
    parity,
    scale,
    signature,
)
from src.tools.lattice_core.domain.exceptions import (
    AsymmetricGramError,
    DegenerateFormError,
    InvalidInvariantsError,
    MalformedGramError,
    NotUnimodularError,
    ZeroScaleError,
)
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix, Inertia, Parity
from tests.helpers import gram


def _jacobi_inertia(rows):
    """Inertia from the signs of leading principal minors (all assumed nonzero)."""
    n = len(rows)
    minors = [1] + [sympy.Matrix(rows)[:k, :k].det() for k in range(1, n + 1)]
    changes = sum(1 for a, b in zip(minors, minors[1:]) if a * b < 0)
    return Inertia(n - changes, 0, changes)


def _random_symmetric(rng: random.Random, n: int, low: int, high: int):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(low, high)
    return rows


class TestGramMatrix:
    def test_rows_are_normalized_to_tuples(self):
        g = GramMatrix.from_rows([[2, 1], [1, 2]])
        assert g.entries == ((2, 1), (1, 2))
        assert g.rank == 2

    def test_ragged_rows_are_rejected(self):
        with pytest.raises(MalformedGramError):
            GramMatrix.from_rows([[1, 0], [0]])

    def test_asymmetric_rows_are_rejected(self):
        with pytest.raises(AsymmetricGramError):
            GramMatrix.from_rows([[1, 2], [3, 1]])

    @pytest.mark.parametrize("bad", [[[1.5]], [["1"]], [[True]]])
    def test_non_integer_entries_are_rejected(self, bad):
        with pytest.raises(MalformedGramError):
            GramMatrix.from_rows(bad)

    def test_empty_form_is_allowed(self):
        g = GramMatrix(())
        assert g.rank == 0
        assert determinant(g) == 1

    def test_pairing_and_submatrix(self, e8):
        assert e8.pairing((1, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0)) == 1
        assert e8.submatrix([4, 7]).entries == ((2, 1), (1, 2))


class TestDeterminant:
    def test_hyperbolic_plane(self, hyperbolic):
        assert determinant(hyperbolic) == -1

    def test_diagonal(self):
        assert determinant(gram((1, 0, 0), (0, 1, 0), (0, 0, -1))) == -1

    def test_e8_is_unimodular(self, e8):
        assert determinant(e8) == 1
        assert is_unimodular(e8)

    def test_zero_leading_entry_needs_a_row_swap(self):
        assert determinant(gram((0, 2, 1), (2, 0, 3), (1, 3, 0))) == 12

    def test_agrees_with_sympy_on_random_matrices(self):
        rng = random.Random(7)
        for _ in range(60):
            rows = _random_symmetric(rng, rng.randint(1, 6), -9, 9)
            assert determinant(GramMatrix.from_rows(rows)) == sympy.Matrix(rows).det()

    def test_large_entries_do_not_overflow(self):
        big = 10 ** 30
        assert determinant(gram((big, 1), (1, big))) == big * big - 1


class TestSignature:
    def test_hyperbolic_plane(self, hyperbolic):
        assert signature(hyperbolic) == Inertia(1, 0, 1)

    def test_diagonal(self):
        assert signature(gram((1, 0, 0), (0, 1, 0), (0, 0, -1))) == Inertia(2, 0, 1)

    def test_e8_is_positive_definite(self, e8):
        assert signature(e8) == Inertia(8, 0, 0)
        assert signature(negate(e8)) == Inertia(0, 0, 8)

    def test_zero_diagonal_block_is_handled(self):
        assert signature(gram((0, 0, 1), (0, 0, 1), (1, 1, 0))) == Inertia(1, 1, 1)

    def test_zero_form(self):
        assert signature(gram((0, 0), (0, 0))) == Inertia(0, 2, 0)

    def test_agrees_with_leading_minors(self):
        rng = random.Random(11)
        checked = 0
        while checked < 40:
            rows = _random_symmetric(rng, rng.randint(1, 5), -5, 5)
            m = sympy.Matrix(rows)
            if any(m[:k, :k].det() == 0 for k in range(1, len(rows) + 1)):
                continue
            assert signature(GramMatrix.from_rows(rows)) == _jacobi_inertia(rows)
            checked += 1


class TestParityAndInvariants:
    def test_parity(self, hyperbolic, e8):
        assert parity(hyperbolic) is Parity.EVEN
        assert parity(e8) is Parity.EVEN
        assert parity(gram((1,))) is Parity.ODD

    @pytest.mark.parametrize("rows, expected", [
        (((0, 1), (1, 0)), (1, 1, "even")),
        (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (1, 2, "odd")),
    ])
    def test_invariants(self, rows, expected):
        assert invariants(GramMatrix(rows)) == FormInvariants(expected[0], expected[1], Parity(expected[2]))

    def test_e8_invariants(self, e8):
        assert invariants(e8) == FormInvariants(8, 0, Parity.EVEN)

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodularError):
            invariants(gram((2,)))

    def test_degenerate(self):
        with pytest.raises(DegenerateFormError):
            invariants(gram((0, 0), (0, 1)))

    def test_invalid_invariants(self):
        with pytest.raises(InvalidInvariantsError):
            FormInvariants(-1, 0, Parity.ODD)
        with pytest.raises(InvalidInvariantsError):
            FormInvariants(1, 0, "mixed")

    def test_parity_string_is_coerced(self):
        assert FormInvariants(1, 0, "odd").parity is Parity.ODD
        assert str(FormInvariants(3, 19, "even")) == "(3, 19, even)"


class TestConstructions:
    def test_direct_sum(self):
        assert direct_sum(gram((1,)), gram((-1,))).entries == ((1, 0), (0, -1))

    def test_direct_sum_of_hyperbolic_planes(self, hyperbolic):
        s = direct_sum(hyperbolic, hyperbolic)
        assert s.rank == 4
        assert s.entries[2][3] == 1 and s.entries[0][2] == 0
        assert invariants(s) == FormInvariants(2, 2, Parity.EVEN)

    def test_direct_sum_all_of_nothing_is_empty(self):
        assert direct_sum_all().rank == 0

    def test_scale_and_negate(self, e8):
        assert scale(gram((1, 2), (2, 1)), 3).entries == ((3, 6), (6, 3))
        assert negate(negate(e8)) == e8

    def test_scale_by_zero_is_rejected(self):
        with pytest.raises(ZeroScaleError):
            scale(gram((1,)), 0)
