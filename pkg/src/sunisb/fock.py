"""Exact multi-oscillator Fock spaces.

The state space of rank N is generated by N-1 independent oscillator
N-plets: one creation operator for every oscillator type i in 1..N-1
and color alpha in 1..N.  States are kept in the unnormalized monomial
basis |n> = (a+)^n |0>, in which

    a+ |n> = |n+1>        a |n> = n |n-1>

so the canonical commutator [a, a+] = 1 holds while every matrix
element downstream stays an exact rational number; square roots never
appear.  ``inner_product`` restores the factorial weights of this
basis, which makes a and a+ mutual adjoints.

Kets are immutable values; every operation returns a new Ket.  All
functions here are pure, so values can be shared freely between
threads.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Iterator

__all__ = [
    "FockState",
    "Ket",
    "vacuum",
    "zero_ket",
    "basis_ket",
    "apply_create",
    "apply_annihilate",
    "inner_product",
    "total_occupations",
    "color_totals",
    "factorial_weight",
    "enumerate_sector",
    "sector_size",
    "ket_to_document",
    "ket_from_document",
    "dumps_ket",
    "loads_ket",
    "format_ket",
    "SERIALIZATION_CONVENTION",
]

SERIALIZATION_CONVENTION = "unnormalized-monomial"


class FockState:
    """One basis state: an (N-1) x N matrix of occupation numbers.

    Rows are oscillator types, columns are colors.  Instances are
    immutable values, hashable, and validated on construction.
    """

    __slots__ = ("n", "occ", "_hash")

    def __init__(self, n: int, occ: Iterable[Iterable[int]]):
        occ = tuple(tuple(int(e) for e in row) for row in occ)
        if n < 2:
            raise ValueError(f"group rank must be at least 2, got {n}")
        if len(occ) != n - 1 or any(len(row) != n for row in occ):
            raise ValueError(f"occupation matrix must be {n - 1}x{n}")
        if any(e < 0 for row in occ for e in row):
            raise ValueError("occupations must be non-negative")
        self.n = n
        self.occ = occ
        self._hash = hash((n, occ))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FockState):
            return NotImplemented
        return self.n == other.n and self.occ == other.occ

    def __repr__(self) -> str:
        return f"FockState({self.n}, {self.occ})"


def _unchecked_state(n: int, occ: tuple[tuple[int, ...], ...]) -> FockState:
    # Trusted fast path: callers guarantee shape and non-negativity.
    s = object.__new__(FockState)
    s.n = n
    s.occ = occ
    s._hash = hash((n, occ))
    return s


def _bumped(state: FockState, i: int, alpha: int, delta: int) -> FockState:
    occ = state.occ
    row = occ[i - 1]
    new_row = row[: alpha - 1] + (row[alpha - 1] + delta,) + row[alpha:]
    return _unchecked_state(state.n, occ[: i - 1] + (new_row,) + occ[i:])


def _moved(state: FockState, src: int, dst: int, alpha: int) -> FockState:
    """One quantum of color alpha moved from row src to row dst."""
    if src == dst:
        return state
    occ = list(state.occ)
    a = alpha - 1
    row = occ[src - 1]
    occ[src - 1] = row[:a] + (row[a] - 1,) + row[a + 1 :]
    row = occ[dst - 1]
    occ[dst - 1] = row[:a] + (row[a] + 1,) + row[a + 1 :]
    return _unchecked_state(state.n, tuple(occ))


def _recolored(state: FockState, i: int, beta: int, alpha: int) -> FockState:
    """One quantum in row i recolored from beta to alpha."""
    if beta == alpha:
        return state
    occ = state.occ
    row = list(occ[i - 1])
    row[beta - 1] -= 1
    row[alpha - 1] += 1
    return _unchecked_state(state.n, occ[: i - 1] + (tuple(row),) + occ[i:])


class Ket:
    """Finite linear combination of FockStates with exact coefficients.

    Coefficients are ints or Fractions; zero terms are pruned on
    construction, so equality of ``terms`` dicts is exact state
    equality.  Treat instances as frozen.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 2:
            raise ValueError(f"group rank must be at least 2, got {n}")
        clean: dict[FockState, object] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for state, coeff in items:
                if state.n != n:
                    raise ValueError("cannot mix group ranks in one ket")
                if coeff:
                    prev = clean.get(state)
                    total = coeff if prev is None else prev + coeff
                    if total:
                        clean[state] = total
                    elif prev is not None:
                        del clean[state]
        self.n = n
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ket):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "Ket") -> "Ket":
        if not isinstance(other, Ket):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("cannot mix group ranks in one ket")
        out = dict(self.terms)
        for state, coeff in other.terms.items():
            total = out.get(state, 0) + coeff
            if total:
                out[state] = total
            elif state in out:
                del out[state]
        return _raw_ket(self.n, out)

    def __sub__(self, other: "Ket") -> "Ket":
        if not isinstance(other, Ket):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __neg__(self) -> "Ket":
        return _raw_ket(self.n, {s: -c for s, c in self.terms.items()})

    def __mul__(self, scalar) -> "Ket":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return _raw_ket(self.n, {})
        return _raw_ket(self.n, {s: c * scalar for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Ket":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self.__mul__(Fraction(1, 1) / scalar)

    def __repr__(self) -> str:
        return f"<Ket N={self.n}, {len(self.terms)} terms>"


def _raw_ket(n: int, terms: dict) -> Ket:
    # Trusted fast path: terms already pruned and rank-consistent.
    k = Ket.__new__(Ket)
    k.n = n
    k.terms = terms
    return k


def zero_ket(n: int) -> Ket:
    return _raw_ket(n, {})


def vacuum(n: int) -> Ket:
    """The Fock vacuum |0> for rank n, with coefficient one."""
    if n < 2:
        raise ValueError(f"group rank must be at least 2, got {n}")
    empty = _unchecked_state(n, ((0,) * n,) * (n - 1))
    return _raw_ket(n, {empty: 1})


def basis_ket(state: FockState) -> Ket:
    return _raw_ket(state.n, {state: 1})


def _check_slot(n: int, i: int, alpha: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexError(f"oscillator type must lie in 1..{n - 1}, got {i}")
    if not 1 <= alpha <= n:
        raise IndexError(f"color must lie in 1..{n}, got {alpha}")


def apply_create(i: int, alpha: int, psi: Ket) -> Ket:
    """Apply a+[i]^alpha: raise one occupation, coefficient unchanged."""
    _check_slot(psi.n, i, alpha)
    return _raw_ket(psi.n, {_bumped(s, i, alpha, 1): c for s, c in psi.terms.items()})


def apply_annihilate(i: int, alpha: int, psi: Ket) -> Ket:
    """Apply a[i]_alpha: lower one occupation, coefficient times old occupation."""
    _check_slot(psi.n, i, alpha)
    out = {}
    for s, c in psi.terms.items():
        m = s.occ[i - 1][alpha - 1]
        if m:
            out[_bumped(s, i, alpha, -1)] = m * c
    return _raw_ket(psi.n, out)


def total_occupations(state: FockState) -> tuple[int, ...]:
    """Row totals (n_1, ..., n_{N-1}): the per-type number operator eigenvalues."""
    return tuple(sum(row) for row in state.occ)


def color_totals(state: FockState) -> tuple[int, ...]:
    """Column totals: quanta of each color, summed over oscillator types."""
    return tuple(map(sum, zip(*state.occ)))


def factorial_weight(state: FockState) -> int:
    """Squared norm of an unnormalized basis state: the product of occupation factorials."""
    w = 1
    for row in state.occ:
        for e in row:
            if e > 1:
                w *= factorial(e)
    return w


def inner_product(phi: Ket, psi: Ket) -> Fraction:
    """Hermitian inner product with factorial weights.

    <phi|psi> = sum over common basis states of
    coeff_phi * coeff_psi * product of occupation factorials.
    Coefficients are rational throughout, so no conjugation is needed,
    and a[i]_alpha is the exact adjoint of a+[i]^alpha in this product.
    """
    if phi.n != psi.n:
        raise ValueError("cannot mix group ranks in an inner product")
    small, big = phi.terms, psi.terms
    if len(big) < len(small):
        small, big = big, small
    total = 0
    for s, c in small.items():
        d = big.get(s)
        if d is not None:
            total += c * d * factorial_weight(s)
    return Fraction(total)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def enumerate_sector(n: int, totals: Iterable[int]) -> list[FockState]:
    """All basis states with the given row totals, in lexicographic order.

    The order is lexicographic on the flattened occupation matrix, so
    it is reproducible across runs and platforms.
    """
    totals = tuple(totals)
    if len(totals) != n - 1:
        raise ValueError(f"need {n - 1} row totals for rank {n}, got {len(totals)}")
    if any(t < 0 for t in totals):
        raise ValueError("row totals must be non-negative")
    per_row = [list(_compositions(t, n)) for t in totals]
    return [_unchecked_state(n, rows) for rows in product(*per_row)]


def sector_size(n: int, totals: Iterable[int]) -> int:
    """Closed-form count of ``enumerate_sector``: a product of binomials."""
    from math import comb

    return_value = 1
    for t in totals:
        return_value *= comb(t + n - 1, n - 1)
    return return_value


def ket_to_document(psi: Ket) -> dict:
    """Plain-data document for a ket.

    Terms are sorted lexicographically by occupation matrix and
    numerator/denominator are decimal strings, so the document is
    deterministic and safe for arbitrarily large integers.
    """
    terms = []
    for state in sorted(psi.terms, key=lambda s: s.occ):
        coeff = Fraction(psi.terms[state])
        terms.append(
            {
                "occ": [list(row) for row in state.occ],
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
            }
        )
    return {"N": psi.n, "convention": SERIALIZATION_CONVENTION, "terms": terms}


def ket_from_document(doc: dict) -> Ket:
    convention = doc.get("convention")
    if convention != SERIALIZATION_CONVENTION:
        raise ValueError(f"unsupported ket convention: {convention!r}")
    n = int(doc["N"])
    terms = {}
    for record in doc["terms"]:
        state = FockState(n, record["occ"])
        terms[state] = Fraction(int(record["num"]), int(record["den"]))
    return Ket(n, terms)


def dumps_ket(psi: Ket) -> str:
    return json.dumps(ket_to_document(psi), indent=1) + "\n"


def loads_ket(text: str) -> Ket:
    return ket_from_document(json.loads(text))


def format_ket(psi: Ket) -> str:
    """Human-readable rendering, terms in serialization order."""
    if not psi.terms:
        return "0"
    parts = []
    for state in sorted(psi.terms, key=lambda s: s.occ):
        coeff = Fraction(psi.terms[state])
        body = " / ".join(" ".join(str(e) for e in row) for row in state.occ)
        parts.append(f"{coeff} |{body}>")
    return "  +  ".join(parts)
