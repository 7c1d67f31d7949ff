"""Independent rank-3 cross-check in the triplet/antitriplet language.

Rank-3 representations (n, m) can be realized on one oscillator
triplet a+ (upper color index) and one antitriplet b+ (lower color
index) instead of two triplets.  This module is that second
realization, used to cross-validate the two-triplet machinery without
sharing any of its operator algebra.

The six oscillators live on the standard 2x3 occupation grid of
``fock``: row 1 holds the a-triplet, row 2 the b-antitriplet.  Only
the operators defined here distinguish the two rows.

Provided:

* the explicit trace-subtracted polynomial states, built from the
  bare monomial by summing delta-pairings of upper with lower index
  positions, each distinct pairing once, with rational coefficients
  ``trace_coeff``;
* the noncompact sp(2,R) triple (pair creation a+.b+, pair
  annihilation a.b, and (N_a + N_b + 3)/2) whose lowest-weight
  condition a.b |psi> = 0 selects exactly the traceless states;
* dressed creation operators for both index types, the analogue of
  ``isb.isb_create`` in this language;
* su(3) generators under which a+ transforms as a triplet and b+ as
  an antitriplet, plus the matching Casimir;
* ``compare_languages``: dimension and Casimir computed in both
  realizations at [n_1, n_2] <-> (n, m) = (n_1 - n_2, n_2), compared
  exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Sequence

from .algebra import LinearOp
from .fock import (
    FockState,
    Ket,
    _bumped,
    _raw_ket,
    apply_annihilate,
    apply_create,
    basis_ket,
    factorial_weight,
    total_occupations,
    vacuum,
    zero_ket,
)
from .irreps import AlgebraViolationError, IrrepLabel, casimir_eigenvalue, nullspace_dimension
from .linalg import integer_rows, rank

__all__ = [
    "A_ROW",
    "B_ROW",
    "ab_vacuum",
    "bare_state",
    "trace_coeff",
    "traceless_state",
    "trace_contract",
    "pair_create",
    "pair_annihilate",
    "sp2r_ops",
    "dressed_create_a",
    "dressed_create_b",
    "isb_monomial",
    "ab_generator_action",
    "ab_casimir2_op",
    "ab_dimension",
    "ab_casimir_eigenvalue",
    "LanguageComparison",
    "compare_languages",
]

A_ROW = 1
B_ROW = 2
_COLORS = (1, 2, 3)


def ab_vacuum() -> Ket:
    return vacuum(3)


def bare_state(alphas: Sequence[int], betas: Sequence[int]) -> Ket:
    """The undressed monomial: a+ factors for alphas, b+ factors for betas."""
    psi = vacuum(3)
    for alpha in alphas:
        psi = apply_create(A_ROW, alpha, psi)
    for beta in betas:
        psi = apply_create(B_ROW, beta, psi)
    return psi


def trace_coeff(n: int, m: int, r: int) -> Fraction:
    """Coefficient of the r-fold trace subtraction in a traceless (n, m) state.

    Value: (-1)^r / [(n+m+1)(n+m) ... (n+m+2-r)], an r-factor falling
    product in the denominator.
    """
    if n < 0 or m < 0:
        raise ValueError("index counts must be non-negative")
    if not 1 <= r <= min(n, m):
        raise ValueError(f"subtraction depth must lie in 1..min(n, m), got {r}")
    den = 1
    for t in range(r):
        den *= n + m + 1 - t
    return Fraction((-1) ** r, den)


def pair_create(psi: Ket) -> Ket:
    """Apply the invariant pair creation a+.b+ (color summed)."""
    acc = zero_ket(3)
    for gamma in _COLORS:
        acc = acc + apply_create(A_ROW, gamma, apply_create(B_ROW, gamma, psi))
    return acc


def pair_annihilate(psi: Ket) -> Ket:
    """Apply the invariant pair annihilation a.b (color summed)."""
    acc = zero_ket(3)
    for gamma in _COLORS:
        acc = acc + apply_annihilate(A_ROW, gamma, apply_annihilate(B_ROW, gamma, psi))
    return acc


def traceless_state(n: int, m: int, alphas: Sequence[int], betas: Sequence[int]) -> Ket:
    """The trace-subtracted polynomial state with the given concrete colors.

    Starting from the bare monomial, every way of pairing r distinct
    upper positions with r distinct lower positions (an l-subset, a
    k-subset, and a bijection between them, each pairing counted once)
    contributes delta factors on the paired colors times the bare
    monomial on the remaining ones, scaled by ``trace_coeff(n, m, r)``
    and r applications of pair creation.  The result is annihilated by
    pair annihilation, which is checked property-by-property in the
    test suite rather than assumed here.
    """
    alphas = tuple(alphas)
    betas = tuple(betas)
    if len(alphas) != n or len(betas) != m:
        raise ValueError("color lists must match the index counts")
    total = bare_state(alphas, betas)
    for r in range(1, min(n, m) + 1):
        coeff = trace_coeff(n, m, r)
        layer = zero_ket(3)
        for l_set in combinations(range(n), r):
            for k_set in combinations(range(m), r):
                for image in permutations(k_set):
                    if all(alphas[l_set[s]] == betas[image[s]] for s in range(r)):
                        rest_a = [alphas[p] for p in range(n) if p not in l_set]
                        rest_b = [betas[p] for p in range(m) if p not in k_set]
                        layer = layer + bare_state(rest_a, rest_b)
        if layer.terms:
            for _ in range(r):
                layer = pair_create(layer)
            total = total + layer * coeff
    return total


def trace_contract(
    builder: Callable[[Sequence[int], Sequence[int]], Ket],
    alphas: Sequence[int],
    betas: Sequence[int],
    l: int,
    k: int,
) -> Ket:
    """Contract upper position l with lower position k (1-based) over all colors.

    Sums builder(alphas with position l replaced by gamma, betas with
    position k replaced by gamma) over gamma.  For a traceless family
    the result is the zero ket; for the bare family it is not, which
    is the negative control.
    """
    alphas = list(alphas)
    betas = list(betas)
    if not 1 <= l <= len(alphas):
        raise IndexError(f"upper position must lie in 1..{len(alphas)}, got {l}")
    if not 1 <= k <= len(betas):
        raise IndexError(f"lower position must lie in 1..{len(betas)}, got {k}")
    acc = zero_ket(3)
    for gamma in _COLORS:
        alphas[l - 1] = gamma
        betas[k - 1] = gamma
        acc = acc + builder(alphas, betas)
    return acc


def sp2r_ops() -> tuple[LinearOp, LinearOp, LinearOp]:
    """The noncompact triple (k_plus, k_minus, k_zero).

    k_plus = a+.b+, k_minus = a.b, k_zero = (N_a + N_b + 3)/2, with
    [k_minus, k_plus] = 2 k_zero and [k_zero, k_pm] = +-k_pm.  The
    lowest-weight condition k_minus |psi> = 0 picks out the traceless
    states; each k_plus application climbs one rung of a multiplicity
    tower without changing the su(3) content.
    """
    kp = LinearOp(3, lambda s: pair_create(basis_ket(s)), label="a+.b+")
    km = LinearOp(3, lambda s: pair_annihilate(basis_ket(s)), label="a.b")

    def k0_act(state: FockState) -> Ket:
        na, nb = total_occupations(state)
        return basis_ket(state) * Fraction(na + nb + 3, 2)

    k0 = LinearOp(3, k0_act, label="(Na+Nb+3)/2")
    return kp, km, k0


def dressed_create_a(alpha: int, psi: Ket) -> Ket:
    """Dressed triplet creation: a+^alpha minus its pair-creation trace.

    The subtraction coefficient 1/(N_a + N_b + 1) is a function of
    number operators written left of the operator part, so it is
    evaluated on the totals after the net raise by one a-quantum.
    """
    if alpha not in _COLORS:
        raise IndexError(f"color must lie in 1..3, got {alpha}")
    acc: dict = {}
    for state, coeff in psi.terms.items():
        na, nb = total_occupations(state)
        c = Fraction(1, na + nb + 2)
        image = basis_ket(_bumped(state, A_ROW, alpha, 1))
        mb = state.occ[B_ROW - 1][alpha - 1]
        if mb:
            lowered = _raw_ket(3, {_bumped(state, B_ROW, alpha, -1): mb})
            image = image - pair_create(lowered) * c
        for s2, c2 in image.terms.items():
            total = acc.get(s2, 0) + coeff * c2
            if total:
                acc[s2] = total
            elif s2 in acc:
                del acc[s2]
    return _raw_ket(3, acc)


def dressed_create_b(beta: int, psi: Ket) -> Ket:
    """Dressed antitriplet creation: b+_beta minus its pair-creation trace."""
    if beta not in _COLORS:
        raise IndexError(f"color must lie in 1..3, got {beta}")
    acc: dict = {}
    for state, coeff in psi.terms.items():
        na, nb = total_occupations(state)
        c = Fraction(1, na + nb + 2)
        image = basis_ket(_bumped(state, B_ROW, beta, 1))
        ma = state.occ[A_ROW - 1][beta - 1]
        if ma:
            lowered = _raw_ket(3, {_bumped(state, A_ROW, beta, -1): ma})
            image = image - pair_create(lowered) * c
        for s2, c2 in image.terms.items():
            total = acc.get(s2, 0) + coeff * c2
            if total:
                acc[s2] = total
            elif s2 in acc:
                del acc[s2]
    return _raw_ket(3, acc)


def isb_monomial(alphas: Sequence[int], betas: Sequence[int]) -> Ket:
    """Monomial of dressed operators on vacuum: b-type first, then a-type."""
    psi = vacuum(3)
    for beta in betas:
        psi = dressed_create_b(beta, psi)
    for alpha in alphas:
        psi = dressed_create_a(alpha, psi)
    return psi


def ab_generator_action(alpha: int, beta: int, psi: Ket) -> Ket:
    """su(3) generator in the Weyl basis for this language.

    Q[alpha, beta] = a+^alpha a_beta - b+_beta b^alpha
                     - delta(alpha, beta) (N_a - N_b)/3,

    under which a+ transforms as a triplet and b+ as an antitriplet.
    """
    if alpha not in _COLORS or beta not in _COLORS:
        raise IndexError("colors must lie in 1..3")
    acc: dict = {}
    for state, coeff in psi.terms.items():
        ma = state.occ[A_ROW - 1][beta - 1]
        if ma:
            s2 = _bumped(_bumped(state, A_ROW, beta, -1), A_ROW, alpha, 1)
            total = acc.get(s2, 0) + ma * coeff
            if total:
                acc[s2] = total
            elif s2 in acc:
                del acc[s2]
        mb = state.occ[B_ROW - 1][alpha - 1]
        if mb:
            s2 = _bumped(_bumped(state, B_ROW, alpha, -1), B_ROW, beta, 1)
            total = acc.get(s2, 0) - mb * coeff
            if total:
                acc[s2] = total
            elif s2 in acc:
                del acc[s2]
        if alpha == beta:
            na, nb = total_occupations(state)
            if na != nb:
                total = acc.get(state, 0) - Fraction(na - nb, 3) * coeff
                if total:
                    acc[state] = total
                elif state in acc:
                    del acc[state]
    return _raw_ket(3, acc)


def ab_casimir2_op() -> LinearOp:
    """Quadratic Casimir of this language, same normalization as ``algebra``."""

    def act(state: FockState) -> Ket:
        base = basis_ket(state)
        total = zero_ket(3)
        for alpha in _COLORS:
            for beta in _COLORS:
                total = total + ab_generator_action(alpha, beta, ab_generator_action(beta, alpha, base))
        return total * Fraction(1, 2)

    return LinearOp(3, act, label="C2(ab)")


def _distinct_families(n: int, m: int):
    for alphas in combinations_with_replacement(_COLORS, n):
        for betas in combinations_with_replacement(_COLORS, m):
            yield alphas, betas


def ab_dimension(n: int, m: int) -> int:
    """Rank of the traceless family, via the factorial-weighted Gram matrix."""
    kets = [
        traceless_state(n, m, alphas, betas)
        for alphas, betas in _distinct_families(n, m)
    ]
    kets = [k for k in kets if k.terms]
    size = len(kets)
    weighted = [{s: c * factorial_weight(s) for s, c in k.terms.items()} for k in kets]
    gram = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        wa = weighted[a]
        for b in range(a, size):
            tb = kets[b].terms
            val = sum((c * tb[s] for s, c in wa.items() if s in tb), Fraction(0))
            gram[a][b] = gram[b][a] = val
    return rank(integer_rows(gram))


def ab_casimir_eigenvalue(n: int, m: int) -> Fraction:
    """Casimir scalar on the traceless family, with a proportionality check."""
    c2 = ab_casimir2_op()
    scalar = None
    for alphas, betas in _distinct_families(n, m):
        psi = traceless_state(n, m, alphas, betas)
        if not psi.terms:
            continue
        image = c2(psi)
        state, coeff = next(iter(psi.terms.items()))
        value = Fraction(image.terms.get(state, 0)) / Fraction(coeff)
        if image != psi * value:
            raise AlgebraViolationError(
                f"Casimir image is not proportional on ({n}, {m}) at {alphas}, {betas}"
            )
        if scalar is None:
            scalar = value
        elif value != scalar:
            raise AlgebraViolationError(f"Casimir eigenvalue varies across ({n}, {m})")
    if scalar is None:
        raise ValueError(f"no nonzero traceless state for ({n}, {m})")
    return scalar


@dataclass(frozen=True)
class LanguageComparison:
    """Dimension and Casimir of one representation, computed in both languages."""

    label: IrrepLabel
    nm: tuple[int, int]
    two_triplet_dimension: int
    ab_dimension: int
    two_triplet_casimir: Fraction
    ab_casimir: Fraction

    @property
    def agree(self) -> bool:
        return (
            self.two_triplet_dimension == self.ab_dimension
            and self.two_triplet_casimir == self.ab_casimir
        )


def compare_languages(label: IrrepLabel) -> LanguageComparison:
    """Compare the two realizations of one rank-3 representation.

    The languages have no state-by-state map here; they are compared on
    the invariant data (dimension, Casimir), computed independently on
    each side.
    """
    if label.n != 3:
        raise ValueError("language comparison is specific to rank 3")
    n1, n2 = label.rows
    nm = (n1 - n2, n2)
    return LanguageComparison(
        label=label,
        nm=nm,
        two_triplet_dimension=nullspace_dimension(label),
        ab_dimension=ab_dimension(*nm),
        two_triplet_casimir=casimir_eigenvalue(label),
        ab_casimir=ab_casimir_eigenvalue(*nm),
    )
