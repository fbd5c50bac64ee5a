"""Isogeny types of intermediate jacobians.

The odd-weight parts of the odd-determinant moduli class are sums of terms
λ_(2α-1) · L^(i-α), and each such term contributes a factor J^α Jac(C) to the
i-th intermediate jacobian, up to isogeny.  A closed multiplicity formula
⌊(i+3-3α)/2⌋ reproduces the factors read off the classes.
"""

from math import comb

from motiveforge import betti, closed_multiplicities, decompose, n0_odd


def describe(dec):
    if not dec.factors:
        return "trivial"
    return " x ".join(f"J^{a}Jac(C)^{m}" for a, m in dec.factors)


for g in (2, 3, 4, 5):
    print(f"genus {g}:")
    for i in range(1, g + 1):
        dec = decompose(g, i)
        assert list(dec.factors) == closed_multiplicities(i)
        print(f"  J^{i} ~ {describe(dec)}")

# the second intermediate jacobian is the jacobian of the curve itself
assert decompose(2, 2).factors == ((1, 1),)

# dimension check: the factors account for the full odd Betti number
print()
g = 5
poly = betti(n0_odd(g))
for i in range(1, g + 1):
    total = sum(m * comb(2 * g, 2 * a - 1) for a, m in decompose(g, i).factors)
    assert total == poly.coeff(2 * i - 1)
    print(f"g={g}, b_{2 * i - 1} = {poly.coeff(2 * i - 1)} "
          f"accounted for by {describe(decompose(g, i))}")
