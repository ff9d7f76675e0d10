"""Counting core: rank distributions, class/character vectors, class numbers.

Two routes to the same answers:
  * field route: enumerate F_q^a and F_q^b, read off rank distributions of
    the commutator matrices, scale by |Z| resp. |G/G'|;
  * dual route (Z/p^e, also GF(p) for cross-checks): enumerate coset
    representatives of g/z and Pontryagin-dual characters of g', using
    Smith normal form for image sizes and radicals. No complex numbers:
    characters are residue tuples and "omega(v) = 1" is a residue-zero test.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

import numpy as np

from .liecore import (
    LieRing,
    ModRing,
    adapt_basis,
    centre,
    derived,
    is_field,
    lower_central_series,
    smith_normal_form,
    _matinv_unimodular,
)
from .commat import BudgetExceeded, build_commutator_matrices, batch_rank_modp, rank

DEFAULT_BUDGET = 10**9
_CHUNK = 1 << 15


class ClassTooLarge(ValueError):
    pass


class InexactDivision(RuntimeError):
    """A Theorem-derived division failed to be exact: internal bug."""


class DuplicateNode(ValueError):
    pass


class NonIntegralCoefficient(ValueError):
    pass


class CountVector:
    """Map exponent -> count. q is the relevant p-power for f-grouped
    vectors (1 for dual-path outputs keyed directly by exponents of p)."""

    def __init__(self, entries, q=1, p=None):
        self.entries = {int(i): int(n) for i, n in entries.items() if n}
        self.q = q
        self.p = p

    def __getitem__(self, i):
        return self.entries.get(i, 0)

    def __eq__(self, other):
        if isinstance(other, CountVector):
            return self.entries == other.entries
        return self.entries == {i: n for i, n in dict(other).items() if n}

    def total(self):
        return sum(self.entries.values())

    def mass(self, weight=1):
        """sum counts * p^(weight * exponent); needs p."""
        assert self.p is not None
        return sum(n * self.p ** (weight * i) for i, n in self.entries.items())

    def items(self):
        return sorted(self.entries.items())

    def __iter__(self):
        return iter(sorted(self.entries))

    def __repr__(self):
        body = ", ".join(f"{i}: {n}" for i, n in self.items())
        return "CountVector({" + body + "})"


def _exact_div(n, d):
    q, r = divmod(n, d)
    if r:
        raise InexactDivision(f"{n} not divisible by {d}")
    return q


# ---------------------------------------------------------------------------
# rank distributions over F_q^n


def _iter_points(fs, nvars, start, stop, step):
    """Odometer-order points of F_q^nvars for indices start, start+step, ...
    (last coordinate fastest)."""
    els = fs.elements()
    q = fs.q
    for n in range(start, stop, step):
        digits = []
        t = n
        for _ in range(nvars):
            digits.append(els[t % q])
            t //= q
        digits.reverse()
        yield tuple(digits)


def rank_distribution(M, budget=DEFAULT_BUDGET, worker=0, workers=1):
    """{rank: #points x in F_q^nvars with rk M(x) = rank}. Deterministic
    odometer order; worker w of W handles indices congruent to w mod W."""
    fs = M.fs
    n = M.nvars
    total = fs.q**n
    if total > budget:
        raise BudgetExceeded(f"q^n = {total} exceeds budget {budget}")
    counts = {}
    if n == 0:
        # the single empty point: the zero matrix
        if worker == 0:
            counts[0] = 1
        return counts
    if fs.f == 1:
        mats = M.constant_matrices().reshape(n, -1)
        q = fs.q
        pows = np.array([q ** (n - 1 - j) for j in range(n)], dtype=np.int64)
        idx = np.arange(worker, total, workers, dtype=np.int64)
        for s in range(0, idx.size, _CHUNK):
            block = idx[s : s + _CHUNK]
            digits = (block[:, None] // pows[None, :]) % q
            evals = (digits @ mats) % q
            ranks = batch_rank_modp(
                evals.reshape(block.size, M.rows, M.cols), q
            )
            vals, cnt = np.unique(ranks, return_counts=True)
            for v, c in zip(vals.tolist(), cnt.tolist()):
                counts[v] = counts.get(v, 0) + c
        return counts
    for pt in _iter_points(fs, n, worker, total, workers):
        r = rank(M.evaluate(pt), fs)
        counts[r] = counts.get(r, 0) + 1
    return counts


def rank_distribution_A(A, budget=DEFAULT_BUDGET):
    """mu[i] = #{x in F_q^a : rk A(x) = i}."""
    mu = rank_distribution(A, budget)
    return CountVector(mu, q=A.fs.q, p=A.fs.p)


def rank_distribution_B(B, budget=DEFAULT_BUDGET):
    """nu[i] = #{y in F_q^b : rk B(y) = 2i}; skew ranks are even."""
    raw = rank_distribution(B, budget)
    nu = {}
    for r, n in raw.items():
        if r % 2:
            raise InexactDivision(f"odd rank {r} for a skew matrix")
        nu[r // 2] = n
    return CountVector(nu, q=B.fs.q, p=B.fs.p)


# ---------------------------------------------------------------------------
# Theorem-B route


def _field_setup(table, budget):
    fs = table.ring
    _, c = lower_central_series(table)
    if c >= fs.p:
        raise ClassTooLarge(f"nilpotency class {c} >= p = {fs.p}")
    ab, adapted = adapt_basis(table)
    A, B = build_commutator_matrices(adapted, ab.a, ab.b)
    return adapted, ab, A, B


def vectors_theoremB(table, budget=DEFAULT_BUDGET):
    """(cc, ch) over GF(p^f): cc[i f] = mu[i] |Z| q^{-i},
    ch[i f] = nu[i] |G/G'| q^{-2i}. All divisions must be exact."""
    fs = table.ring
    assert is_field(fs)
    adapted, ab, A, B = _field_setup(table, budget)
    a, b, h = ab.a, ab.b, table.h
    q, f = fs.q, fs.f
    zdim = h - a
    mu = rank_distribution_A(A, budget)
    nu = rank_distribution_B(B, budget)
    cc = {}
    for i, n in mu.items():
        cc[i * f] = _exact_div(n * q**zdim, q**i)
    ch = {}
    for i, n in nu.items():
        ch[i * f] = _exact_div(n * q ** (h - b), q ** (2 * i))
    return (CountVector(cc, q=q, p=fs.p), CountVector(ch, q=q, p=fs.p))


def s_size_from_mu(mu, b, q):
    """|S(G)| = sum_x q^{b - rk A(x)}."""
    return sum(n * q ** (b - i) for i, n in mu.items())


def s_size_from_nu(nu, a, q):
    """|S(G)| = sum_y q^{a - rk B(y)}."""
    return sum(n * q ** (a - 2 * i) for i, n in nu.items())


def class_number(table, budget=DEFAULT_BUDGET):
    """(k(G), |S(G)|). Field tables go through the rank route, modular
    tables through the dual route; k = |S| |Z| / |G'| either way."""
    if is_field(table.ring):
        fs = table.ring
        adapted, ab, A, B = _field_setup(table, budget)
        mu = rank_distribution_A(A, budget)
        s = s_size_from_mu(mu.entries, ab.b, fs.q)
        zorder = fs.q ** (table.h - ab.a)
        dorder = fs.q**ab.b
        k = _exact_div(s * zorder, dorder)
        return k, s
    cc, ch = vectors_dual(table, budget)
    k = cc.total()
    zorder = centre(table).order()
    dorder = derived(table).order()
    s = _exact_div(k * dorder, zorder)
    return k, s


# ---------------------------------------------------------------------------
# dual route over Z/p^e (and GF(p), for cross-checks)


def _as_modular(table):
    R = table.ring
    if isinstance(R, ModRing):
        return table, R
    if is_field(R) and R.f == 1:
        R2 = ModRing(R.p, 1)
        return LieRing(R2, table.h, dict(table.lam), table.name), R2
    raise ValueError("dual route requires Z/p^e or prime-field coefficients")


class _Quotient:
    """Coset representatives of (Z/m)^h modulo a subgroup, via SNF."""

    def __init__(self, sub_gens, m, h):
        rows = [[int(x) % m for x in v] for v in sub_gens]
        rows += [[m if i == j else 0 for j in range(h)] for i in range(h)]
        S, U, V = smith_normal_form(rows)
        self.d = [S[i][i] for i in range(h)]
        self.Vinv = _matinv_unimodular(V)
        self.m = m
        self.h = h
        self.order = 1
        for d in self.d:
            self.order *= d

    def reps(self):
        """One representative per coset, deterministic order."""
        h, m = self.h, self.m
        t = [0] * h
        while True:
            vec = [0] * h
            for i, ti in enumerate(t):
                if ti:
                    for j in range(h):
                        vec[j] = (vec[j] + ti * self.Vinv[i][j]) % m
            yield tuple(vec)
            i = h - 1
            while i >= 0:
                t[i] += 1
                if t[i] < self.d[i]:
                    break
                t[i] = 0
                i -= 1
            if i < 0:
                return


class _DualBasis:
    """Cyclic data of a subgroup M of (Z/m)^h: generators g_i of order n_i
    with M the internal direct sum of the <g_i>. Characters of M are residue
    tuples (c_i), c_i mod n_i, pairing sum_i c_i a_i(v) m/n_i mod m."""

    def __init__(self, gens, m, h):
        rows = [[int(x) % m for x in v] for v in gens]
        rows += [[m if i == j else 0 for j in range(h)] for i in range(h)]
        S, U, V = smith_normal_form(rows)
        self.m = m
        self.h = h
        self.V = V
        dd = [S[i][i] for i in range(h)]
        self.active = []  # (row of V^{-1} index, d_i, n_i, unit-inverse data)
        Vinv = _matinv_unimodular(V)
        self.gens = []
        self.orders = []
        self._dec = []
        for i, d in enumerate(dd):
            g = gcd(d, m)
            n = m // g
            if n == 1:
                continue
            self.gens.append(tuple(d * x % m for x in Vinv[i]))
            self.orders.append(n)
            dprime = d // g  # coprime to p
            self._dec.append((i, g, n, pow(dprime, -1, n)))
        self.order = 1
        for n in self.orders:
            self.order *= n

    def coords(self, v):
        """a_i with v = sum a_i g_i (a_i mod n_i); v must lie in M."""
        w = [0] * self.h
        for i in range(self.h):
            if v[i]:
                for j in range(self.h):
                    w[j] += v[i] * self.V[i][j]
        out = []
        for (i, g, n, dinv) in self._dec:
            wi = w[i] % self.m
            if wi % g:
                raise ValueError("vector outside the subgroup")
            out.append((wi // g) * dinv % n)
        return out

    def characters(self):
        """All residue tuples (c_i), odometer order."""
        t = [0] * len(self.orders)
        if not self.orders:
            yield ()
            return
        while True:
            yield tuple(t)
            i = len(t) - 1
            while i >= 0:
                t[i] += 1
                if t[i] < self.orders[i]:
                    break
                t[i] = 0
                i -= 1
            if i < 0:
                return


def _image_order(vectors, m, h):
    """Order of the subgroup of (Z/m)^h generated by the vectors."""
    rows = [[int(x) % m for x in v] for v in vectors]
    rows += [[m if i == j else 0 for j in range(h)] for i in range(h)]
    S, _, _ = smith_normal_form(rows)
    denom = 1
    for i in range(h):
        denom *= S[i][i]
    return m**h // denom


def vectors_dual(table, budget=DEFAULT_BUDGET):
    """(cc, ch) by Theorem A over Z/p^e:
    cc_i = #{x in g/z : |im ad_x| = p^i} |z| p^{-i},
    ch_i = #{omega : |Rad(B_omega)/z| = p^{-2i} |g/z|} |G/G'| p^{-2i}."""
    table, R = _as_modular(table)
    p, m, h = R.p, R.m, table.h
    _, c = lower_central_series(table)
    if c >= p:
        raise ClassTooLarge(f"nilpotency class {c} >= p = {p}")
    z = centre(table)
    quo = _Quotient(z.vectors, m, h)
    dsub = derived(table)
    dual = _DualBasis(dsub.vectors, m, h)
    if quo.order > budget or quo.order * dual.order > budget:
        raise BudgetExceeded(
            f"|g/z| = {quo.order}, |g'^| = {dual.order} exceed budget {budget}"
        )
    zorder = z.order()
    gorder = m**h

    # class side: |im ad_x| over coset representatives
    cc_raw = {}
    reps = list(quo.reps())
    for x in reps:
        imgs = [table.bracket(table.basis_vector(j), x) for j in range(h)]
        imgs = [v for v in imgs if any(v)]
        size = _image_order(imgs, m, h) if imgs else 1
        i = 0
        s = size
        while s > 1:
            s //= p
            i += 1
        assert p**i == size
        cc_raw[i] = cc_raw.get(i, 0) + 1
    cc = {i: _exact_div(n * zorder, p**i) for i, n in cc_raw.items()}

    # character side: radical size of the induced form for each character.
    # coordinates of [x, e_j] in the dual basis, per representative
    bracket_coords = []
    for x in reps:
        row = []
        for j in range(h):
            v = table.bracket(x, table.basis_vector(j))
            row.append(dual.coords(v))
        bracket_coords.append(row)
    t = len(dual.orders)
    weights = [m // n for n in dual.orders]
    ch_raw = {}
    for chi in dual.characters():
        rad = 0
        for row in bracket_coords:
            ok = True
            for coords in row:
                s = 0
                for i in range(t):
                    ci = chi[i]
                    if ci and coords[i]:
                        s += ci * coords[i] * weights[i]
                if s % m:
                    ok = False
                    break
            if ok:
                rad += 1
        # rad = |Rad(B_omega)| as a subgroup of g/z; find i with
        # rad = |g/z| p^{-2i}
        ratio = _exact_div(quo.order, rad)
        i2 = 0
        s = ratio
        while s > 1:
            s //= p
            i2 += 1
        if p**i2 != ratio or i2 % 2:
            raise InexactDivision(f"radical index {ratio} is not an even p-power")
        ch_raw[i2 // 2] = ch_raw.get(i2 // 2, 0) + 1
    goverd = _exact_div(gorder, dsub.order())
    ch = {i: _exact_div(n * goverd, p ** (2 * i)) for i, n in ch_raw.items()}

    ccv = CountVector(cc, q=1, p=p)
    chv = CountVector(ch, q=1, p=p)
    if ccv.total() != chv.total():
        raise InexactDivision("class and character totals disagree")
    return ccv, chv


# ---------------------------------------------------------------------------
# exact interpolation in q


class QPolynomial:
    """Exact polynomial with rational coefficients, constant term first."""

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    def __call__(self, q):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc if acc.denominator != 1 else int(acc)

    def degree(self):
        return len(self.coeffs) - 1

    def qminus1_coefficients(self):
        """Coefficients b_j with P(q) = sum_j b_j (q-1)^j."""
        out = [Fraction(0)] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += a * comb(i, j)
        while out and out[-1] == 0:
            out.pop()
        return out

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == [Fraction(c) for c in other]

    def __repr__(self):
        return f"QPolynomial({[str(c) for c in self.coeffs]})"


def poly_fit(samples, integral=False):
    """Exact Lagrange interpolation through (q, value) samples.

    Returns a QPolynomial; with integral=True, any non-integer coefficient
    raises NonIntegralCoefficient. Degree = #samples - 1 (before trimming)."""
    pts = list(samples)
    nodes = [q for q, _ in pts]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"repeated interpolation node in {nodes}")
    n = len(pts)
    coeffs = [Fraction(0)] * n
    for i, (qi, vi) in enumerate(pts):
        # numerator polynomial prod_{j != i} (q - q_j), times v_i / denom
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, (qj, _) in enumerate(pts):
            if j == i:
                continue
            num = [Fraction(0)] + num
            for t in range(len(num) - 1):
                num[t] -= qj * num[t + 1]
            denom *= qi - qj
        scale = Fraction(vi) / denom
        for t in range(len(num)):
            coeffs[t] += scale * num[t]
    if integral and any(c.denominator != 1 for c in coeffs):
        raise NonIntegralCoefficient(str(coeffs))
    return QPolynomial(coeffs)
