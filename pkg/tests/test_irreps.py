"""Representation labels: monomials, dimensions, null spaces, Casimir scalars."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sunisb.algebra import invariant_action
from sunisb.fock import inner_product, zero_ket
from sunisb.irreps import (
    IrrepLabel,
    all_multi_indices,
    build_monomial,
    casimir_eigenvalue,
    constraint_residual,
    distinct_multi_indices,
    monomial_rank,
    nullspace_basis,
    nullspace_dimension,
    weyl_dimension,
)
from sunisb.linalg import rank


class TestIrrepLabel:
    def test_rejects_increasing_rows(self):
        with pytest.raises(ValueError):
            IrrepLabel(3, (1, 2))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            IrrepLabel(3, (1,))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            IrrepLabel(3, (1, -1))


# row lengths frozen from the closed product over box hooks
DIMENSIONS = {
    (2, (0,)): 1,
    (2, (3,)): 4,
    (3, (1, 0)): 3,
    (3, (1, 1)): 3,
    (3, (2, 1)): 8,
    (3, (3, 0)): 10,
    (4, (1, 0, 0)): 4,
    (4, (1, 1, 0)): 6,
    (4, (1, 1, 1)): 4,
    (4, (2, 1, 0)): 20,
    (4, (2, 1, 1)): 15,
    (5, (2, 1, 1, 1)): 24,
}


def test_weyl_dimension_frozen_values():
    for (n, rows), expected in DIMENSIONS.items():
        assert weyl_dimension(IrrepLabel(n, rows)) == expected


def test_trivial_label_is_one_dimensional():
    for n in (2, 3, 4, 5):
        assert weyl_dimension(IrrepLabel(n, (0,) * (n - 1))) == 1


class TestMultiIndices:
    def test_counts(self):
        label = IrrepLabel(3, (2, 1))
        assert len(list(all_multi_indices(label))) == 3**2 * 3
        # distinct: multiset choices per row
        assert len(list(distinct_multi_indices(label))) == 6 * 3

    def test_shapes(self):
        label = IrrepLabel(4, (2, 1, 0))
        for idx in distinct_multi_indices(label):
            assert tuple(len(g) for g in idx) == (2, 1, 0)


class TestMonomials:
    def test_vacuum_for_trivial_label(self):
        psi = build_monomial(IrrepLabel(3, (0, 0)), ((), ()))
        assert inner_product(psi, psi) == 1

    def test_all_indices_constrained(self):
        label = IrrepLabel(3, (2, 1))
        for idx in all_multi_indices(label):
            psi = build_monomial(label, idx)
            report = constraint_residual(psi)
            assert report
            assert not report.violated

    def test_index_validation(self):
        label = IrrepLabel(3, (2, 1))
        with pytest.raises(ValueError):
            build_monomial(label, ((1,), (2,)))
        with pytest.raises(ValueError):
            build_monomial(label, ((1, 4), (2,)))


class TestNullspace:
    def test_dimension_agreement(self):
        for (n, rows), expected in DIMENSIONS.items():
            if n >= 5 or sum(rows) > 4:
                continue
            label = IrrepLabel(n, rows)
            assert nullspace_dimension(label) == expected
            assert monomial_rank(label) == expected

    def test_blocked_equals_dense(self):
        """Color-weight blocking must not change the computed null space."""
        from sunisb.fock import basis_ket, enumerate_sector
        from sunisb.linalg import nullspace as dense_nullspace

        label = IrrepLabel(3, (2, 1))
        states = enumerate_sector(3, label.rows)
        # dense constraint matrix over the whole sector, one row per image state
        by_image: dict = {}
        for pos, s in enumerate(states):
            image = invariant_action(1, 2, basis_ket(s))
            for t, c in image.terms.items():
                by_image.setdefault(t, [0] * len(states))[pos] = c
        dense = dense_nullspace(list(by_image.values()), len(states))
        assert len(dense) == nullspace_dimension(label)

    def test_basis_vectors_are_constrained(self):
        label = IrrepLabel(4, (1, 1, 0))
        basis = nullspace_basis(label)
        assert len(basis) == 6
        for psi in basis:
            for i in range(1, 4):
                for j in range(i + 1, 4):
                    assert not invariant_action(i, j, psi).terms

    def test_basis_is_independent(self):
        label = IrrepLabel(3, (1, 1))
        basis = nullspace_basis(label)
        states = sorted({s for psi in basis for s in psi.terms}, key=lambda s: s.occ)
        index = {s: pos for pos, s in enumerate(states)}
        mat = []
        for psi in basis:
            row = [0] * len(states)
            for s, c in psi.terms.items():
                row[index[s]] = c
            mat.append(row)
        assert rank(mat) == len(basis)


class TestCasimir:
    def test_rank2_tower(self):
        for q in range(5):
            got = casimir_eigenvalue(IrrepLabel(2, (q,)))
            assert got == Fraction(q, 2) * (Fraction(q, 2) + 1)

    def test_rank3_fundamental_and_octet(self):
        assert casimir_eigenvalue(IrrepLabel(3, (1, 0))) == Fraction(4, 3)
        assert casimir_eigenvalue(IrrepLabel(3, (2, 1))) == 3

    def test_conjugate_labels_share_eigenvalue(self):
        assert casimir_eigenvalue(IrrepLabel(3, (1, 1))) == casimir_eigenvalue(
            IrrepLabel(3, (1, 0))
        )

    def test_matches_nullspace_action(self):
        from sunisb.algebra import casimir2_op

        label = IrrepLabel(3, (2, 0))
        value = casimir_eigenvalue(label)
        c2 = casimir2_op(3)
        for psi in nullspace_basis(label):
            assert c2(psi) == psi * value


@given(st.sampled_from(sorted(DIMENSIONS)))
def test_dimension_positive_and_conjugation_symmetric(key):
    n, rows = key
    label = IrrepLabel(n, rows)
    d = weyl_dimension(label)
    assert d >= 1
    # complement the diagram inside the n-row bounding box: dimension is preserved
    width = rows[0]
    full = rows + (0,)
    conj = tuple(width - r for r in reversed(full))[:-1]
    assert weyl_dimension(IrrepLabel(n, conj)) == d
