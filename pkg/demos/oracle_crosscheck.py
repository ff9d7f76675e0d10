"""
Group-side oracle vs matrix-side counting
=========================================

The truncated Hausdorff series turns a Lie ring of class c < p into a
group on the same coordinate tuples.  Brute-force censuses of conjugacy
classes and coadjoint orbits on that group must reproduce the vectors
computed from rank loci of A(X) and B(Y).  Dim counts are tiny here, so
everything runs in seconds.
"""

from fractions import Fraction

from pgc import (
    make_field, ModRing, LieRing, free_table,
    vectors_theoremB, vectors_dual,
    bch, star, conjugacy_census, coadjoint_census,
)

# the Hausdorff series through degree 3: x + y + [x,y]/2 + [[x,y],x]/12 + ...
series = bch(3)
for deg in sorted(series.terms):
    row = " + ".join(f"{coeff} {series.basis.display(idx)}"
                     for idx, coeff in sorted(series.terms[deg].items()))
    print(f"  degree {deg}:  {row}")
assert series.terms[2][2] == Fraction(1, 2)

# star product on f_{2,3}(F_5) is noncommutative: the generators u, v
# pick up a +-1/2 [u,v] term depending on the order of multiplication
t = free_table(2, 3, make_field(5))
u = (1, 0, 0, 0, 0)
v = (0, 1, 0, 0, 0)
print("u*v =", star(u, v, t), " v*u =", star(v, u, t))

cc_m, ch_m = vectors_theoremB(t)
cc_o = conjugacy_census(t)
ch_o = coadjoint_census(t)
print("matrix  cc:", dict(cc_m.items()), " ch:", dict(ch_m.items()))
print("oracle  cc:", dict(cc_o.items()), " ch:", dict(ch_o.items()))
assert dict(cc_m.items()) == dict(cc_o.items())
assert dict(ch_m.items()) == dict(ch_o.items())

# over Z/9 the dual-route census replaces the rank census; the oracle
# still agrees (Heisenberg over Z/9: 105 classes)
t9 = LieRing(ModRing(3, 2), 3, {(0, 1): {2: 1}}, "heisenberg Z/9")
cc_d, ch_d = vectors_dual(t9)
assert dict(conjugacy_census(t9).items()) == dict(cc_d.items())
assert dict(coadjoint_census(t9).items()) == dict(ch_d.items())
print("Z/9 heisenberg k =", cc_d.total())
