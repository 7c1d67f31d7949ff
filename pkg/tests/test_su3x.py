"""The rank-3 triplet/antitriplet realization and its pair algebra."""

from fractions import Fraction
from itertools import product

import pytest

from sunisb.irreps import IrrepLabel
from sunisb.su3x import (
    ab_casimir2_op,
    ab_casimir_eigenvalue,
    ab_dimension,
    ab_generator_action,
    ab_vacuum,
    bare_state,
    compare_languages,
    dressed_create_a,
    dressed_create_b,
    isb_monomial,
    pair_annihilate,
    pair_create,
    sp2r_ops,
    trace_coeff,
    trace_contract,
    traceless_state,
)

COLORS = (1, 2, 3)


class TestTraceCoeff:
    def test_frozen_values(self):
        assert trace_coeff(1, 1, 1) == Fraction(-1, 3)
        assert trace_coeff(2, 1, 1) == Fraction(-1, 4)
        assert trace_coeff(2, 2, 1) == Fraction(-1, 5)
        assert trace_coeff(2, 2, 2) == Fraction(1, 20)

    def test_sign_alternates_with_depth(self):
        assert trace_coeff(3, 3, 1) < 0 < trace_coeff(3, 3, 2)
        assert trace_coeff(3, 3, 3) < 0

    def test_validation(self):
        with pytest.raises(ValueError):
            trace_coeff(1, 1, 2)
        with pytest.raises(ValueError):
            trace_coeff(-1, 1, 1)


class TestTracelessStates:
    def test_explicit_adjoint_component(self):
        # one upper and one lower index of the same color: bare minus a third
        # of the color-summed pair
        got = traceless_state(1, 1, (1,), (1,))
        expected = bare_state((1,), (1,))
        for gamma in COLORS:
            expected = expected - bare_state((gamma,), (gamma,)) * Fraction(1, 3)
        assert got == expected

    def test_equals_dressed_monomial(self):
        for n, m in ((1, 1), (2, 1), (1, 2)):
            for alphas in product(COLORS, repeat=n):
                for betas in product(COLORS, repeat=m):
                    assert traceless_state(n, m, alphas, betas) == isb_monomial(alphas, betas)

    def test_every_contraction_vanishes(self):
        for alphas in product(COLORS, repeat=2):
            for betas in product(COLORS, repeat=1):
                def builder(a, b):
                    return traceless_state(2, 1, a, b)

                for l in (1, 2):
                    assert not trace_contract(builder, alphas, betas, l, 1).terms

    def test_bare_contraction_does_not_vanish(self):
        assert trace_contract(bare_state, (1,), (1,), 1, 1).terms


class TestDimensions:
    def test_closed_form_family(self):
        # (n+1)(m+1)(n+m+2)/2 for the two-index family
        assert ab_dimension(1, 1) == 8
        assert ab_dimension(2, 1) == 15
        assert ab_dimension(1, 2) == 15
        assert ab_dimension(2, 2) == 27

    def test_pure_towers(self):
        assert ab_dimension(1, 0) == 3
        assert ab_dimension(0, 1) == 3
        assert ab_dimension(2, 0) == 6
        assert ab_dimension(0, 0) == 1


class TestCasimir:
    def test_adjoint_value(self):
        assert ab_casimir_eigenvalue(1, 1) == 3

    def test_fundamental_value(self):
        assert ab_casimir_eigenvalue(1, 0) == Fraction(4, 3)
        assert ab_casimir_eigenvalue(0, 1) == Fraction(4, 3)

    def test_operator_matches_eigenvalue(self):
        value = ab_casimir_eigenvalue(1, 1)
        c2 = ab_casimir2_op()
        for alphas in product(COLORS, repeat=1):
            for betas in product(COLORS, repeat=1):
                psi = traceless_state(1, 1, alphas, betas)
                if psi.terms:
                    assert c2(psi) == psi * value


class TestGenerators:
    def test_traceless(self):
        psi = bare_state((1, 2), (3,))
        total = None
        for a in COLORS:
            image = ab_generator_action(a, a, psi)
            total = image if total is None else total + image
        assert not total.terms

    def test_annihilates_vacuum(self):
        for a in COLORS:
            for b in COLORS:
                assert not ab_generator_action(a, b, ab_vacuum()).terms


class TestPairAlgebra:
    def test_relations_on_vacuum(self):
        kp, km, k0 = sp2r_ops()
        v = ab_vacuum()
        assert km(kp(v)) - kp(km(v)) == k0(v) * 2
        assert k0(v) == v * Fraction(3, 2)

    def test_lowest_weight_states(self):
        for n, m in ((1, 1), (2, 1)):
            for alphas in product(COLORS, repeat=n):
                for betas in product(COLORS, repeat=m):
                    psi = traceless_state(n, m, alphas, betas)
                    assert not pair_annihilate(psi).terms

    def test_tower_above_bottom(self):
        base = traceless_state(1, 1, (1,), (2,))
        lifted = pair_create(base)
        assert lifted.terms
        assert pair_annihilate(lifted).terms
        # the lift commutes with the group action, so the scalar is unchanged
        assert ab_casimir2_op()(lifted) == lifted * 3


class TestDressedOperators:
    def test_build_from_vacuum(self):
        got = dressed_create_a(1, dressed_create_b(2, ab_vacuum()))
        assert got == isb_monomial((1,), (2,))

    def test_cross_commutation(self):
        psi = traceless_state(1, 1, (1,), (2,))
        for x in COLORS:
            for y in COLORS:
                ab = dressed_create_a(x, dressed_create_b(y, psi))
                ba = dressed_create_b(y, dressed_create_a(x, psi))
                assert ab == ba


class TestLanguageComparison:
    def test_adjoint_agrees(self):
        result = compare_languages(IrrepLabel(3, (2, 1)))
        assert result.nm == (1, 1)
        assert result.agree
        assert result.two_triplet_dimension == 8
        assert result.ab_casimir == 3

    def test_rejects_other_ranks(self):
        with pytest.raises(ValueError):
            compare_languages(IrrepLabel(4, (1, 0, 0)))
