"""Randomized invariants.

Each hypothesis test declares its example budget explicitly; the budgets
are summed in RANDOM_CASE_BUDGET and checked by the acceptance suite, so
shrinking one means growing another.
"""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pgc import (
    make_field,
    LieRing,
    adapt_basis, build_commutator_matrices,
    rank, pfaffian,
    free_table,
    boston_isaacs_table, quadric_table, fm_table, isaacs_cd_table,
    vectors_theoremB,
    bch, bch_matrix_sum, matrix_exp, matrix_log,
    star, star_inverse,
)
from pgc.lazard import _mat_mul

N_BILINEAR = 400
N_EVEN_RANK = 300
N_PFAFFIAN = 200
N_BCH_MATRIX = 120
N_STAR_ASSOC = 100
RANDOM_CASE_BUDGET = (N_BILINEAR + N_EVEN_RANK + N_PFAFFIAN
                      + N_BCH_MATRIX + N_STAR_ASSOC)

_SETTINGS = dict(deadline=None, derandomize=True)


def _heis(fs):
    return LieRing(fs, 3, {(0, 1): {2: 1}}, "heis")


def _prep(t):
    ab, adapted = adapt_basis(t)
    A, B = build_commutator_matrices(adapted, ab.a, ab.b)
    return t.ring, ab.a, ab.b, A, B


_POOL = [_prep(t) for t in (
    _heis(make_field(3)),
    _heis(make_field(5)),
    _heis(make_field(3, 2)),
    free_table(2, 3, make_field(5)),
    free_table(3, 2, make_field(3)),
    quadric_table(3),
    boston_isaacs_table(1, 5),
    fm_table(1, 2, 3),
    isaacs_cd_table([1, 2], 3),
)]


def _dot(fs, u, v):
    acc = fs.zero()
    for x, y in zip(u, v):
        acc = fs.add(acc, fs.mul(x, y))
    return acc


@st.composite
def _table_point(draw):
    fs, a, b, A, B = _POOL[draw(st.integers(0, len(_POOL) - 1))]
    pt = lambda n: tuple(fs.from_int(draw(st.integers(0, fs.q - 1)))
                         for _ in range(n))
    return fs, a, b, A, B, pt


@settings(max_examples=N_BILINEAR, **_SETTINGS)
@given(_table_point())
def test_bilinear_pairing_identity(tp):
    # <[v, x], y> read off A equals v^T B(y) x for all v, x in the
    # cocentre and y in the derived coordinates
    fs, a, b, A, B, pt = tp
    v, x, y = pt(a), pt(a), pt(b)
    Ax = A.evaluate(x)
    w = [_dot(fs, [Ax[i][k] for i in range(a)], v) for k in range(b)]
    lhs = _dot(fs, w, y)
    By = B.evaluate(y)
    rhs = _dot(fs, v, [_dot(fs, row, x) for row in By])
    assert lhs == rhs


@settings(max_examples=N_EVEN_RANK, **_SETTINGS)
@given(_table_point())
def test_skew_matrix_rank_is_even(tp):
    fs, a, b, A, B, pt = tp
    assert rank(B.evaluate(pt(b)), fs) % 2 == 0


@st.composite
def _skew_matrix(draw):
    p = draw(st.sampled_from((3, 5, 7)))
    n = draw(st.sampled_from((2, 4, 6)))
    fs = make_field(p)
    m = [[fs.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = fs.from_int(draw(st.integers(0, p - 1)))
            m[i][j] = e
            m[j][i] = fs.neg(e)
    return fs, m


def _det(fs, rows):
    m = [list(r) for r in rows]
    n = len(m)
    det = fs.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if not fs.is_zero(m[r][c])), None)
        if piv is None:
            return fs.zero()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = fs.neg(det)
        det = fs.mul(det, m[c][c])
        inv = fs.inv(m[c][c])
        for r in range(c + 1, n):
            if fs.is_zero(m[r][c]):
                continue
            f = fs.mul(m[r][c], inv)
            for cc in range(c, n):
                m[r][cc] = fs.sub(m[r][cc], fs.mul(f, m[c][cc]))
    return det


@settings(max_examples=N_PFAFFIAN, **_SETTINGS)
@given(_skew_matrix())
def test_pfaffian_squares_to_determinant(sm):
    fs, m = sm
    pf = pfaffian(m, fs)
    assert fs.mul(pf, pf) == _det(fs, m)


@st.composite
def _nilpotent_pair(draw):
    ent = st.integers(-3, 3)
    mk = lambda: [[Fraction(draw(ent)) if j > i else Fraction(0)
                   for j in range(5)] for i in range(5)]
    return mk(), mk()


@settings(max_examples=N_BCH_MATRIX, **_SETTINGS)
@given(_nilpotent_pair())
def test_bch_agrees_with_matrix_log_exp(mn):
    # strictly upper triangular 5x5: all products of length 5 vanish,
    # so the degree-4 series is exact
    M, N = mn
    direct = matrix_log(_mat_mul(matrix_exp(M), matrix_exp(N)))
    assert bch_matrix_sum(bch(4), M, N) == direct


_F23 = free_table(2, 3, make_field(5))
_PT5 = st.tuples(*([st.integers(0, 4)] * 5))


@settings(max_examples=N_STAR_ASSOC, **_SETTINGS)
@given(_PT5, _PT5, _PT5)
def test_star_group_axioms_random_points(u, v, w):
    t = _F23
    assert star(star(u, v, t), w, t) == star(u, star(v, w, t), t)
    zero = (0,) * 5
    assert star(u, zero, t) == tuple(u)
    assert star(u, star_inverse(u, t), t) == zero


def test_random_case_budget_is_large():
    assert RANDOM_CASE_BUDGET >= 1000


def test_bch_denominators_have_small_prime_factors():
    series = bch(6)
    for deg, row in series.terms.items():
        for coeff in row.values():
            d = coeff.denominator
            for p in (2, 3, 5):
                while d % p == 0:
                    d //= p
            assert d == 1, (deg, coeff)


def test_mass_identities_on_enumerated_vectors():
    tables = [
        _heis(make_field(3)),
        _heis(make_field(3, 2)),
        free_table(2, 3, make_field(5)),
        quadric_table(3),
        fm_table(1, 2, 3),
    ]
    for t in tables:
        cc, ch = vectors_theoremB(t)
        order = t.ring.q ** t.h
        assert cc.mass(1) == order, t.name
        assert ch.mass(2) == order, t.name
        assert cc.total() == ch.total(), t.name
