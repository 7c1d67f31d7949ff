"""Rank 2 warm-up: one oscillator row, spin towers, exact Casimir values.

At rank 2 the whole machinery collapses to something familiar: a
single row of two colors, symmetric states only, and the quadratic
Casimir acting as s(s+1) with s = (number of quanta)/2.  Everything
printed below is an exact fraction.
"""

from fractions import Fraction

from sunisb import (
    IrrepLabel,
    basis_ket,
    casimir2_op,
    casimir_eigenvalue,
    enumerate_sector,
    format_ket,
    weyl_dimension,
)

print("== spin ladders at rank 2 ==\n")

c2 = casimir2_op(2)
for q in range(5):
    label = IrrepLabel(2, (q,))
    dim = weyl_dimension(label)
    value = casimir_eigenvalue(label)
    spin = Fraction(q, 2)
    print(f"{q} quanta: dimension {dim}, casimir {value} (= s(s+1) at s={spin})")

print("\nThe eigenvalue is exact on every state of the tower, not just on average.")
for state in enumerate_sector(2, (2,)):
    psi = basis_ket(state)
    image = c2(psi)
    print(f"  C2 {format_ket(psi):<14} = {format_ket(image)}")

print("\nDimensions follow the closed product over the diagram:")
for q in range(7):
    print(f"  [{q}] -> {weyl_dimension(IrrepLabel(2, (q,)))}")
