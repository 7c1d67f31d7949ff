"""Linear operators on kets: invariant bilinears, su(N) generators, Casimir.

Operators are closures over an action on basis states, extended
linearly; nothing is materialized as a matrix here.  Two families
matter:

* the bilinears a+[i].a[j] built from oscillator types only.  They
  commute with every su(N) generator, close into the u(N-1) algebra

      [L_ij, L_kl] = delta_jk L_il - delta_il L_kj,

  and the pairs with i < j are the constraints whose common null space
  carries the column antisymmetry of a Young diagram;

* the su(N) generators in the Weyl (elementary-matrix) basis

      Q[alpha,beta] = sum_i a+[i]^alpha a[i]_beta
                      - delta(alpha,beta)/N * (total number),

  chosen over the lambda-matrix basis so that all structure constants
  and matrix elements stay rational.  The quadratic Casimir is
  (1/2) sum_ab Q[a,b] Q[b,a].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .fock import (
    FockState,
    Ket,
    _moved,
    _raw_ket,
    _recolored,
    basis_ket,
    total_occupations,
    zero_ket,
)

__all__ = [
    "LinearOp",
    "commutator",
    "zero_op",
    "invariant_action",
    "invariant_op",
    "generator_action",
    "generator_op",
    "casimir2_op",
    "check_invariance",
]


class LinearOp:
    """A linear map on kets, defined by its action on basis states."""

    __slots__ = ("n", "label", "_on_basis")

    def __init__(self, n: int, on_basis: Callable[[FockState], Ket], label: str | None = None):
        self.n = n
        self._on_basis = on_basis
        self.label = label

    def on_basis(self, state: FockState) -> Ket:
        return self._on_basis(state)

    def __call__(self, psi: Ket) -> Ket:
        if psi.n != self.n:
            raise ValueError("operator and ket have different group ranks")
        acc: dict = {}
        for state, coeff in psi.terms.items():
            for s2, c2 in self._on_basis(state).terms.items():
                total = acc.get(s2, 0) + coeff * c2
                if total:
                    acc[s2] = total
                elif s2 in acc:
                    del acc[s2]
        return _raw_ket(self.n, acc)

    def _require_same_rank(self, other: "LinearOp") -> None:
        if self.n != other.n:
            raise ValueError("operators act on different group ranks")

    def __matmul__(self, other: "LinearOp") -> "LinearOp":
        if not isinstance(other, LinearOp):
            return NotImplemented
        self._require_same_rank(other)
        return LinearOp(self.n, lambda s: self(other._on_basis(s)))

    def __add__(self, other: "LinearOp") -> "LinearOp":
        if not isinstance(other, LinearOp):
            return NotImplemented
        self._require_same_rank(other)
        return LinearOp(self.n, lambda s: self._on_basis(s) + other._on_basis(s))

    def __sub__(self, other: "LinearOp") -> "LinearOp":
        if not isinstance(other, LinearOp):
            return NotImplemented
        self._require_same_rank(other)
        return LinearOp(self.n, lambda s: self._on_basis(s) - other._on_basis(s))

    def __neg__(self) -> "LinearOp":
        return LinearOp(self.n, lambda s: -self._on_basis(s))

    def __mul__(self, scalar) -> "LinearOp":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LinearOp(self.n, lambda s: self._on_basis(s) * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        name = self.label or "?"
        return f"<LinearOp {name} on rank {self.n}>"


def commutator(a: LinearOp, b: LinearOp) -> LinearOp:
    """[a, b] as a new operator."""
    if a.n != b.n:
        raise ValueError("operators act on different group ranks")
    return LinearOp(a.n, lambda s: a(b.on_basis(s)) - b(a.on_basis(s)))


def zero_op(n: int) -> LinearOp:
    return LinearOp(n, lambda s: zero_ket(n), label="0")


def _check_row(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexError(f"oscillator type must lie in 1..{n - 1}, got {i}")


def _check_color(n: int, alpha: int) -> None:
    if not 1 <= alpha <= n:
        raise IndexError(f"color must lie in 1..{n}, got {alpha}")


def invariant_action(i: int, j: int, psi: Ket) -> Ket:
    """Apply the invariant bilinear a+[i].a[j] to a ket.

    Moves one quantum from type j to type i, color by color; for i = j
    this is the row-j number operator.
    """
    n = psi.n
    _check_row(n, i)
    _check_row(n, j)
    acc: dict = {}
    for state, coeff in psi.terms.items():
        row = state.occ[j - 1]
        for alpha in range(1, n + 1):
            m = row[alpha - 1]
            if m:
                s2 = _moved(state, j, i, alpha)
                total = acc.get(s2, 0) + m * coeff
                if total:
                    acc[s2] = total
                elif s2 in acc:
                    del acc[s2]
    return _raw_ket(n, acc)


def invariant_op(i: int, j: int, n: int) -> LinearOp:
    _check_row(n, i)
    _check_row(n, j)
    return LinearOp(n, lambda s: invariant_action(i, j, basis_ket(s)), label=f"a+[{i}].a[{j}]")


def generator_action(alpha: int, beta: int, psi: Ket) -> Ket:
    """Apply the Weyl-basis su(N) generator Q[alpha, beta] to a ket."""
    n = psi.n
    _check_color(n, alpha)
    _check_color(n, beta)
    acc: dict = {}
    for state, coeff in psi.terms.items():
        for i in range(1, n):
            m = state.occ[i - 1][beta - 1]
            if m:
                s2 = _recolored(state, i, beta, alpha)
                total = acc.get(s2, 0) + m * coeff
                if total:
                    acc[s2] = total
                elif s2 in acc:
                    del acc[s2]
        if alpha == beta:
            quanta = sum(total_occupations(state))
            if quanta:
                total = acc.get(state, 0) - Fraction(quanta, n) * coeff
                if total:
                    acc[state] = total
                elif state in acc:
                    del acc[state]
    return _raw_ket(n, acc)


def generator_op(alpha: int, beta: int, n: int) -> LinearOp:
    _check_color(n, alpha)
    _check_color(n, beta)
    return LinearOp(n, lambda s: generator_action(alpha, beta, basis_ket(s)), label=f"Q[{alpha},{beta}]")


def casimir2_op(n: int) -> LinearOp:
    """The quadratic Casimir (1/2) sum over color pairs of Q[a,b] Q[b,a].

    On rank 2 this reproduces j(j+1) with j = (number of quanta)/2.
    """

    def act(state: FockState) -> Ket:
        base = basis_ket(state)
        total = zero_ket(n)
        for alpha in range(1, n + 1):
            for beta in range(1, n + 1):
                total = total + generator_action(alpha, beta, generator_action(beta, alpha, base))
        return total * Fraction(1, 2)

    return LinearOp(n, act, label="C2")


def check_invariance(i: int, j: int, samples: Iterable[Ket]) -> bool:
    """True iff [Q[alpha, beta], a+[i].a[j]] kills every sample, all colors."""
    for psi in samples:
        n = psi.n
        moved = invariant_action(i, j, psi)
        for alpha in range(1, n + 1):
            for beta in range(1, n + 1):
                left = generator_action(alpha, beta, moved)
                right = invariant_action(i, j, generator_action(alpha, beta, psi))
                if left != right:
                    return False
    return True
