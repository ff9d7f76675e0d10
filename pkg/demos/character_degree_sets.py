"""
Prescribed character degree and class size sets
===============================================

Two class-2 constructions with controllable invariants.  The block
table isaacs_cd(I, p) has character degrees exactly {p^i : i in I u {0}};
fm_table(l, n, p) has degrees {1, p^l} but class sizes 1, p, ..., p^l
together with p^n.  Both are read off a coadjoint/conjugacy census of
groups of order at most 5^9.
"""

from pgc import (
    isaacs_cd_table, fm_table, build_entry,
    vectors_theoremB, conjugacy_census,
)

for I in ({1}, {2}, {1, 2}, {1, 3}):
    for p in (3, 5):
        t = isaacs_cd_table(sorted(I), p)
        _, ch = vectors_theoremB(t)
        cd = {p**i for i, n in ch.items() if n}
        expect = {p**i for i in {0} | set(I)}
        print(f"I={sorted(I)} p={p}: degrees {sorted(cd)}")
        assert cd == expect

t = fm_table(2, 3, 5)
cc, ch = vectors_theoremB(t)
cd = {5**i for i, n in ch.items() if n}
cs = {5**i for i, n in cc.items() if n}
print("fm(2,3,5): degrees", sorted(cd), " class sizes", sorted(cs))
assert cd == {1, 25} and cs == {1, 5, 25, 125}

# the catalog wrapper carries the same claims as metadata
entry = build_entry("fm", l=2, n=3, p=5)
print("catalog entry:", entry.name, entry.parameters, entry.expected)

# cross-check one census against the group-side oracle (order 3^6)
t = isaacs_cd_table([1, 2], 3)
assert dict(conjugacy_census(t).items()) == dict(vectors_theoremB(t)[0].items())
print("oracle agrees on isaacs_cd([1,2], 3)")
