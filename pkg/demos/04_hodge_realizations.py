"""Betti and Hodge realizations of moduli classes.

λ_a realizes to C(2g,a)·t^a resp. the bigraded exterior ranks of C^g x + C^g y;
L realizes to t² resp. xy.  Setting x = y = t in a Hodge polynomial recovers
the Betti polynomial.
"""

from motiveforge import (betti, hodge, hodge_closed, hodge_diamond_rows,
                         hn_closed, level_per_weight, n0_odd)

g = 2
cls = n0_odd(g)
print(f"odd moduli class at g={g}: {cls.render()}")
print("Betti:", betti(cls).render("t"))
print("Hodge:", hodge(cls).render())

# the closed expression gives the same polynomials
assert betti(cls) == hn_closed(g)
assert hodge(cls) == hodge_closed(g)

# per-weight Hodge diamonds
print()
print("weight  (p,q)  h")
for w, p, q, h in hodge_diamond_rows(cls):
    print(f"{w:6d}  ({p},{q})  {h}")

# the level of each weight part stays within a third of the weight
print()
for gg in (2, 3, 4):
    levels = level_per_weight(n0_odd(gg))
    print(f"g={gg} levels:", levels)
    assert all(lv <= m // 3 for m, lv in levels.items())
print("level bound holds: level(weight m) <= m/3")

# Hodge numbers beyond Betti: at g=3, weight 6 mixes (3,3) with (2,4)+(4,2)
print()
h6 = hodge(n0_odd(3).weight_part(6))
print("g=3 weight-6 Hodge part:", h6.render())
