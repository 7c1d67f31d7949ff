"""Rank 4: the top-row dressed creation assembled two different ways.

The closed form dresses the row-3 creation operator with chains
through rows 2 and 1.  The iterative route glues the already-dressed
rank-3 operators with two rational coefficients.  On constraint-space
states the two agree term by term, which is the content of the
recursive construction.
"""

from sunisb import (
    IrrepLabel,
    isb_create,
    isb_create_iterative,
    nullspace_basis,
    nullspace_dimension,
    weyl_dimension,
)
from sunisb.fock import format_ket

print("== rank-4 gluing vs closed form ==\n")

for totals in ((1, 1, 0), (2, 1, 0), (2, 1, 1)):
    label = IrrepLabel(4, totals)
    basis = nullspace_basis(label)
    agree = sum(
        isb_create_iterative(alpha, psi) == isb_create(3, alpha, psi)
        for psi in basis
        for alpha in range(1, 5)
    )
    print(
        f"label {list(totals)}: dimension {weyl_dimension(label)} "
        f"(null space {nullspace_dimension(label)}), "
        f"gluing agrees on {agree}/{4 * len(basis)} images"
    )

print("\none image in full, first basis vector of [1,1,0], color 1:")
psi = nullspace_basis(IrrepLabel(4, (1, 1, 0)))[0]
print(f"  input : {format_ket(psi)}")
image = isb_create_iterative(1, psi)
print(f"  output: {format_ket(image)}")
check = "identical" if image == isb_create(3, 1, psi) else "DIFFERENT"
print(f"  closed-form comparison: {check}")
