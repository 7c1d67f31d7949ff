"""Irreducible representations from ordered monomials of dressed bosons.

A representation of su(N) is labeled by a Young diagram with weakly
decreasing row lengths [n_1, ..., n_{N-1}].  A basis state of it is an
ordered monomial: all dressed row-1 creation operators applied to
vacuum first, then row 2, and so on (the order matters; within one row
it does not).

Three mutually independent dimension computations cross-check the
construction:

* ``weyl_dimension``: the Weyl product formula, pure arithmetic;
* ``nullspace_dimension``: brute force, the dimension of the common
  null space of the constraint bilinears a+[i].a[i+1] on the full
  occupation sector;
* ``monomial_rank``: the rank of the monomial family under the
  factorial-weighted inner product.

The constraint bilinears preserve the per-color totals of a state, so
the null-space and rank eliminations split into independent
color-weight blocks; that is what keeps them small.  All block and
basis orders are fixed by the lexicographic state order, so every
result here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator

from .algebra import casimir2_op, invariant_action
from .fock import (
    Ket,
    basis_ket,
    color_totals,
    enumerate_sector,
    inner_product,
    factorial_weight,
    vacuum,
)
from .isb import isb_create
from .linalg import integer_rows, nullspace, rank

__all__ = [
    "IrrepLabel",
    "ConstraintReport",
    "AlgebraViolationError",
    "all_multi_indices",
    "distinct_multi_indices",
    "build_monomial",
    "weyl_dimension",
    "constraint_residual",
    "nullspace_dimension",
    "nullspace_basis",
    "monomial_rank",
    "casimir_eigenvalue",
]


@dataclass(frozen=True)
class IrrepLabel:
    """Young-diagram label: N-1 weakly decreasing non-negative row lengths."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if self.n < 2:
            raise ValueError(f"group rank must be at least 2, got {self.n}")
        if len(self.rows) != self.n - 1:
            raise ValueError(f"need {self.n - 1} row lengths for rank {self.n}")
        if any(r < 0 for r in self.rows):
            raise ValueError("row lengths must be non-negative")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing, got {self.rows}")


class AlgebraViolationError(RuntimeError):
    """An operator that must act as a scalar on an irreducible family did not."""


@dataclass(frozen=True)
class ConstraintReport:
    """Outcome of a constraint check: which bilinears failed to annihilate."""

    satisfied: bool
    violated: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.satisfied


def _check_multi_index(label: IrrepLabel, idx) -> tuple[tuple[int, ...], ...]:
    idx = tuple(tuple(int(a) for a in row) for row in idx)
    if len(idx) != label.n - 1:
        raise ValueError(f"need {label.n - 1} color rows, got {len(idx)}")
    for row, (colors, length) in enumerate(zip(idx, label.rows), start=1):
        if len(colors) != length:
            raise ValueError(f"row {row} needs {length} colors, got {len(colors)}")
        if any(not 1 <= a <= label.n for a in colors):
            raise ValueError(f"colors must lie in 1..{label.n}, got {colors}")
    return idx


def all_multi_indices(label: IrrepLabel) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every color assignment, one tuple of colors per diagram row."""
    colors = range(1, label.n + 1)
    per_row = [product(colors, repeat=r) for r in label.rows]
    return product(*per_row)


def distinct_multi_indices(label: IrrepLabel) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Color assignments deduplicated by the within-row permutation symmetry."""
    colors = range(1, label.n + 1)
    per_row = [combinations_with_replacement(colors, r) for r in label.rows]
    return product(*per_row)


def build_monomial(label: IrrepLabel, idx) -> Ket:
    """The monomial state: dressed creations applied row 1 first, then upward."""
    idx = _check_multi_index(label, idx)
    psi = vacuum(label.n)
    for row, colors in enumerate(idx, start=1):
        for alpha in colors:
            psi = isb_create(row, alpha, psi)
        if not psi.terms:
            break
    return psi


def weyl_dimension(label: IrrepLabel) -> int:
    """Weyl product formula, evaluated exactly."""
    lam = label.rows + (0,)
    n = label.n
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def constraint_residual(psi: Ket) -> ConstraintReport:
    """Check that every constraint bilinear a+[i].a[i+1] annihilates psi."""
    violated = tuple(
        i for i in range(1, psi.n - 1) if invariant_action(i, i + 1, psi).terms
    )
    return ConstraintReport(not violated, violated)


def _weight_blocks(n: int, totals: Iterable[int]) -> dict:
    blocks: dict = {}
    for state in enumerate_sector(n, totals):
        blocks.setdefault(color_totals(state), []).append(state)
    return blocks


def _constraint_rows(n: int, states: list) -> list[list[int]]:
    # stacked matrix of all fundamental constraints on one weight block;
    # row keys are (constraint, image state), columns follow `states`
    rows: dict = {}
    width = len(states)
    for j, s in enumerate(states):
        for i in range(1, n - 1):
            image = invariant_action(i, i + 1, basis_ket(s))
            for t, c in image.terms.items():
                key = (i, t)
                row = rows.get(key)
                if row is None:
                    row = rows[key] = [0] * width
                row[j] = c
    return list(rows.values())


def nullspace_dimension(label: IrrepLabel) -> int:
    """Dimension of the common constraint null space on the label's sector."""
    blocks = _weight_blocks(label.n, label.rows)
    total = 0
    for weight in sorted(blocks):
        states = blocks[weight]
        total += len(states) - rank(_constraint_rows(label.n, states))
    return total


def nullspace_basis(label: IrrepLabel) -> list[Ket]:
    """Exact basis of the constraint null space, in deterministic order.

    Vectors are primitive integer combinations of sector basis states,
    grouped by color weight.
    """
    blocks = _weight_blocks(label.n, label.rows)
    out = []
    for weight in sorted(blocks):
        states = blocks[weight]
        for vec in nullspace(_constraint_rows(label.n, states), len(states)):
            out.append(Ket(label.n, {states[j]: c for j, c in enumerate(vec) if c}))
    return out


def _index_weight(n: int, idx) -> tuple[int, ...]:
    counts = [0] * n
    for row in idx:
        for alpha in row:
            counts[alpha - 1] += 1
    return tuple(counts)


def _weighted_terms(psi: Ket) -> dict:
    return {s: c * factorial_weight(s) for s, c in psi.terms.items()}


def monomial_rank(label: IrrepLabel) -> int:
    """Rank of the deduplicated monomial family, via factorial-weighted Gram matrices.

    Monomials of different color weight are orthogonal, so the Gram
    matrix splits into blocks; the inner product is positive definite,
    which makes the Gram rank the dimension of the span.
    """
    groups: dict = {}
    for idx in distinct_multi_indices(label):
        ket = build_monomial(label, idx)
        if ket.terms:
            groups.setdefault(_index_weight(label.n, idx), []).append(ket)
    total = 0
    for weight in sorted(groups):
        kets = groups[weight]
        weighted = [_weighted_terms(k) for k in kets]
        size = len(kets)
        gram = [[Fraction(0)] * size for _ in range(size)]
        for a in range(size):
            wa = weighted[a]
            for b in range(a, size):
                tb = kets[b].terms
                val = sum((c * tb[s] for s, c in wa.items() if s in tb), Fraction(0))
                gram[a][b] = gram[b][a] = val
        total += rank(integer_rows(gram))
    return total


def casimir_eigenvalue(label: IrrepLabel) -> Fraction:
    """The exact quadratic Casimir scalar on the label's monomial family.

    Applies the Casimir to every deduplicated monomial, verifies the
    result is exactly proportional with one common ratio, and returns
    that ratio.  A non-proportional image raises
    ``AlgebraViolationError``.
    """
    c2 = casimir2_op(label.n)
    scalar = None
    seen_nonzero = False
    for idx in distinct_multi_indices(label):
        psi = build_monomial(label, idx)
        if not psi.terms:
            continue
        seen_nonzero = True
        image = c2(psi)
        state, coeff = next(iter(psi.terms.items()))
        value = Fraction(image.terms.get(state, 0)) / Fraction(coeff)
        if image != psi * value:
            raise AlgebraViolationError(
                f"Casimir image is not proportional on {label.rows} at index {idx}"
            )
        if scalar is None:
            scalar = value
        elif value != scalar:
            raise AlgebraViolationError(
                f"Casimir eigenvalue varies across monomials of {label.rows}"
            )
    if not seen_nonzero:
        raise ValueError(f"no nonzero monomial exists for {label.rows}")
    return scalar
