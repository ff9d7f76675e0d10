"""
Free nilpotent tables and their closed forms
============================================

f_{r,c} is the free nilpotent Lie ring on r generators of class c,
realized on a Hall basis with integer structure constants.  Its class
vector has a closed form (every noncentral element of weight i sits in
a class of size q^{k(r,c,i)}), and for four small (r, c) the character
vector is pinned as explicit polynomials.  Enumeration and closed form
must agree wherever both run.
"""

from pgc import (
    make_field, hall_basis, free_table, witt, free_dimension,
    vectors_theoremB, class_vector_closed, class_number_closed,
    fixture_vectors, poly_fit,
)

# Hall basis of f_{2,3}: x, y, [x,y], [[x,y],x], [[x,y],y]
basis = hall_basis(2, 3)
print("Hall basis of f_{2,3}:", ", ".join(basis.display(i) for i in range(basis.dimension)))
print("layer sizes:", [witt(2, i) for i in (1, 2, 3)], "->", free_dimension(2, 3))

# closed form vs Theorem-B enumeration at q = 5
t = free_table(2, 3, make_field(5))
cc, ch = vectors_theoremB(t)
print("enumerated cc:", dict(cc.items()), " ch:", dict(ch.items()))
assert dict(cc.items()) == dict(class_vector_closed(2, 3, 5).items())
assert dict(ch.items()) == dict(fixture_vectors(2, 3, 5).items())
print("closed forms agree, k =", class_number_closed(2, 3, 5))

# k(f_{2,3}) as a polynomial in q, by exact interpolation of the closed form
samples = [(q, class_number_closed(2, 3, q)) for q in (7, 11, 13, 17)]
poly = poly_fit(samples, integral=True)
print("k(f_{2,3})(q) coefficients, constant first:", [int(c) for c in poly.coeffs])

# the (2,5) character fixture: the degree-q^3 entry factors through (q-1)
# with one negative coefficient, visible in its (q-1)-expansion
entry3 = poly_fit([(q, fixture_vectors(2, 5, q).entries[3])
                   for q in (7, 11, 13, 17, 19, 23, 29, 31, 37)], integral=True)
print("ch_3(f_{2,5}) in powers of (q-1):",
      [int(b) for b in entry3.qminus1_coefficients()])
