"""Fraction-free elimination against a plain Gaussian oracle."""

from fractions import Fraction
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from sunisb.linalg import in_span, integer_rows, nullspace, rank, row_echelon


def gauss_rank(rows, ncols):
    """Classic Gaussian elimination over Fraction, written independently."""
    mat = [[Fraction(x) for x in row] for row in rows]
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        r += 1
    return r


matrices = st.integers(1, 5).flatmap(
    lambda ncols: st.tuples(
        st.just(ncols),
        st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=ncols, max_size=ncols),
            min_size=0,
            max_size=6,
        ),
    )
)


@given(matrices)
def test_rank_matches_gaussian_oracle(data):
    ncols, rows = data
    assert rank(integer_rows(rows)) == gauss_rank(rows, ncols)


@given(matrices)
def test_nullspace_properties(data):
    ncols, rows = data
    vectors = nullspace(integer_rows(rows), ncols)
    assert len(vectors) == ncols - gauss_rank(rows, ncols)
    for v in vectors:
        assert all(isinstance(x, int) for x in v)
        assert any(v)
        assert gcd(*v) == 1 if len(v) > 1 else abs(v[0]) == 1
        nz = next(x for x in v if x)
        assert nz > 0
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    # mutual independence
    assert rank([list(v) for v in vectors]) == len(vectors)


def test_row_echelon_pivots():
    mat, pivots = row_echelon([[0, 1, 2], [0, 2, 4], [1, 0, 0]])
    assert len(pivots) == 2
    assert rank([[0, 1, 2], [0, 2, 4], [1, 0, 0]]) == 2


def test_integer_rows_scales_away_denominators():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(2), Fraction(0)]]
    scaled = integer_rows(rows)
    assert scaled == [[3, 2], [2, 0]] or scaled == [[3, 2], [1, 0]]
    assert all(isinstance(x, int) for row in scaled for x in row)


def test_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert in_span(basis, [2, 3, 5])
    assert not in_span(basis, [1, 0, 0])


def test_empty_matrix_nullspace_is_identity_sized():
    vectors = nullspace([], 3)
    assert len(vectors) == 3
    assert rank(vectors) == 3
