"""Dressed ladder operators: coefficients, chains, recurrence, the gluing route."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sunisb.algebra import invariant_action
from sunisb.fock import apply_create, basis_ket, vacuum
from sunisb.irreps import IrrepLabel, build_monomial, nullspace_basis
from sunisb.isb import (
    SingularCoefficientError,
    annihilation_coeff,
    creation_coeff,
    isb_annihilate,
    isb_create,
    isb_create_iterative,
    verify_recurrence,
)


def ordered_totals(length, max_entry=4):
    return combinations_with_replacement(range(max_entry, -1, -1), length)


class TestCoefficients:
    def test_frozen_values(self):
        assert creation_coeff(2, 1, (2, 1)) == Fraction(-1, 3)
        assert annihilation_coeff(2, 1, (2, 1)) == Fraction(1, 3)
        assert creation_coeff(3, 2, (2, 1, 0)) == Fraction(-1, 3)
        assert creation_coeff(3, 1, (2, 1, 0)) == Fraction(-1, 5)

    def test_closed_form(self):
        for totals in ordered_totals(3):
            for k in range(2, 4):
                for i in range(1, k):
                    den = totals[i - 1] - totals[k - 1] + 1 + (k - i)
                    assert creation_coeff(k, i, totals) == Fraction(-1, den)

    def test_annihilation_mirrors_creation(self):
        # first argument of both is the higher row of the pair
        for totals in ordered_totals(3):
            for k in range(2, 4):
                for i in range(1, k):
                    assert annihilation_coeff(k, i, totals) == -creation_coeff(k, i, totals)

    def test_singular_denominator_raises(self):
        # row totals (0, 2) put the pair (2, 1) exactly on the pole
        with pytest.raises(SingularCoefficientError):
            creation_coeff(2, 1, (0, 2))

    @given(st.integers(2, 5), st.integers(0, 5))
    def test_equal_totals_never_singular(self, length, top):
        totals = (top,) * length
        for k in range(2, length + 1):
            for i in range(1, k):
                assert creation_coeff(k, i, totals).denominator >= 1


class TestRecurrence:
    def test_holds_on_dominant_grid(self):
        for length in (3, 4, 5):
            assert verify_recurrence(length, list(ordered_totals(length)))

    def test_detects_damage(self):
        def damaged(k, i, totals):
            value = creation_coeff(k, i, totals)
            return value * 2 if i == 1 else value

        assert not verify_recurrence(3, list(ordered_totals(3, 2)), coeff=damaged)


class TestCreation:
    def test_row1_is_plain_creation(self):
        assert isb_create(1, 2, vacuum(3)) == apply_create(1, 2, vacuum(3))

    def test_column_antisymmetry(self):
        # same color twice in one column collapses to zero
        psi = isb_create(2, 1, isb_create(1, 1, vacuum(3)))
        assert psi.is_zero()

    def test_octet_top_term_weight(self):
        psi = build_monomial(IrrepLabel(3, (2, 1)), ((1, 1), (2,)))
        lead = apply_create(2, 2, apply_create(1, 1, apply_create(1, 1, vacuum(3))))
        state = next(iter(lead.terms))
        assert psi.terms[state] == Fraction(2, 3)

    def test_images_stay_constrained(self):
        # row-2 creation on a fundamental state lands in the two-box column
        for psi in nullspace_basis(IrrepLabel(3, (1, 0))):
            for alpha in (1, 2, 3):
                image = isb_create(2, alpha, psi)
                assert not invariant_action(1, 2, image).terms

    def test_overfull_column_collapses(self):
        # one box per row is the tallest column: another row-2 box gives zero
        for psi in nullspace_basis(IrrepLabel(3, (1, 1))):
            for alpha in (1, 2, 3):
                assert isb_create(2, alpha, psi).is_zero()


class TestAnnihilation:
    def test_kills_vacuum(self):
        for k in (1, 2):
            for alpha in (1, 2, 3):
                assert isb_annihilate(k, alpha, vacuum(3)).is_zero()

    def test_kills_protected_row(self):
        # removing a row-1 box from a [1,1] state would break row ordering
        label = IrrepLabel(3, (1, 1))
        for psi in nullspace_basis(label):
            for alpha in (1, 2, 3):
                assert isb_annihilate(1, alpha, psi).is_zero()

    def test_inverts_one_step(self):
        # on the fundamental tower the dressed pair acts diagonally
        psi = isb_create(1, 1, vacuum(3))
        down = isb_annihilate(1, 1, psi)
        assert down == vacuum(3)


class TestIterative:
    def test_matches_closed_form(self):
        for totals in ((1, 1, 0), (2, 1, 0)):
            for psi in nullspace_basis(IrrepLabel(4, totals)):
                for alpha in range(1, 5):
                    assert isb_create_iterative(alpha, psi) == isb_create(3, alpha, psi)

    def test_rejects_wrong_rank(self):
        with pytest.raises(ValueError):
            isb_create_iterative(1, vacuum(3))
