"""Commutator matrices A(X), B(Y) and rank machinery over finite fields.

A is a x b in the variables X_1..X_a with A(X)_{ik} = sum_j lambda_ij^k X_j;
B is the skew a x a matrix with B(Y)_{ij} = sum_k lambda_ij^k Y_k, where k
runs over the tail window of an adapted basis. Rank loci of A give class
sizes, of B character degrees.
"""

from __future__ import annotations

import numpy as np

from .liecore import is_field, is_adapted


class NotAdapted(ValueError):
    pass


class NotSkew(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class LinearFormMatrix:
    """Matrix of linear forms: entry (r, c) = sum_v coeffs[r][c][v] Var_v."""

    def __init__(self, fs, rows, cols, nvars, coeffs, skew=False):
        self.fs = fs
        self.rows = rows
        self.cols = cols
        self.nvars = nvars
        self.coeffs = coeffs  # coeffs[r][c][v], reduced field elements
        self.skew = skew

    def evaluate(self, point):
        """Substitute the variables; returns a list of row tuples."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        fs = self.fs
        out = []
        for r in range(self.rows):
            row = []
            for c in range(self.cols):
                acc = fs.zero()
                for v in range(self.nvars):
                    cf = self.coeffs[r][c][v]
                    if not fs.is_zero(cf) and not fs.is_zero(point[v]):
                        acc = fs.add(acc, fs.mul(cf, point[v]))
                row.append(acc)
            out.append(tuple(row))
        return out

    def constant_matrices(self):
        """Per-variable integer matrices (prime fields only), shape
        (nvars, rows, cols); M(x) = sum_v x_v mats[v]."""
        assert self.fs.f == 1
        mats = np.zeros((self.nvars, self.rows, self.cols), dtype=np.int64)
        for r in range(self.rows):
            for c in range(self.cols):
                for v in range(self.nvars):
                    mats[v, r, c] = self.coeffs[r][c][v]
        return mats

    def __str__(self):
        names = [f"V{v+1}" for v in range(self.nvars)]
        lines = []
        for r in range(self.rows):
            ent = []
            for c in range(self.cols):
                terms = [
                    f"{self.fs.fmt(cf)}*{names[v]}"
                    for v, cf in enumerate(self.coeffs[r][c])
                    if not self.fs.is_zero(cf)
                ]
                ent.append(" + ".join(terms) if terms else "0")
            lines.append("[" + ", ".join(ent) + "]")
        return "\n".join(lines)


def build_commutator_matrices(table, a, b):
    """(A, B) for an adapted table: front window 0..a-1, tail window h-b..h-1.

    Raises NotAdapted unless the window conditions hold and all brackets of
    front-window vectors land in the tail window.
    """
    fs = table.ring
    if not is_field(fs):
        raise NotAdapted("commutator matrices require a field table")
    h = table.h
    if not is_adapted(table, a, b):
        raise NotAdapted("window conditions fail; run adapt_basis first")
    off = h - b
    zero = fs.zero()
    acf = [[[zero] * a for _ in range(b)] for _ in range(a)]
    bcf = [[[zero] * b for _ in range(a)] for _ in range(a)]
    for i in range(a):
        for j in range(a):
            for k, c in table.bracket_basis(i, j).items():
                if k < off:
                    raise NotAdapted(
                        f"[e_{i}, e_{j}] has a coordinate outside the tail window"
                    )
                acf[i][k - off][j] = c
                bcf[i][j][k - off] = c
    A = LinearFormMatrix(fs, a, b, a, acf)
    B = LinearFormMatrix(fs, a, a, b, bcf, skew=True)
    return A, B


def rank(matrix, fs):
    """Row rank by Gaussian elimination; matrix is a list of row sequences."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, len(rows)):
            if not fs.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = fs.inv(rows[rk][col])
        prow = [fs.mul(inv, x) for x in rows[rk]]
        rows[rk] = prow
        for r in range(len(rows)):
            if r != rk and not fs.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [fs.sub(x, fs.mul(f, y)) for x, y in zip(rows[r], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def batch_rank_modp(M, p):
    """Ranks of a batch of matrices over F_p; M has shape (N, R, C), int64,
    entries already reduced. Vectorized elimination, destroys M."""
    N, R, C = M.shape
    ranks = np.zeros(N, dtype=np.int64)
    if R == 0 or C == 0 or N == 0:
        return ranks
    inv = np.array([0] + [pow(v, p - 2, p) for v in range(1, p)], dtype=np.int64)
    rowidx = np.arange(R)
    for col in range(C):
        colvals = M[:, :, col]
        cand = (colvals != 0) & (rowidx[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        idx = np.nonzero(has)[0]
        if idx.size == 0:
            continue
        piv = np.argmax(cand[idx], axis=1)
        r0 = ranks[idx]
        tmp = M[idx, piv].copy()
        M[idx, piv] = M[idx, r0]
        M[idx, r0] = tmp
        pivrow = (tmp * inv[tmp[:, col]][:, None]) % p
        M[idx, r0] = pivrow
        factors = M[idx, :, col].copy()
        factors[np.arange(idx.size), r0] = 0
        M[idx] = (M[idx] - factors[:, :, None] * pivrow[:, None, :]) % p
        ranks[idx] += 1
    return ranks


def pfaffian(matrix, fs):
    """Pfaffian of a skew matrix; 0 for odd size. Convention:
    Pf([[0, s], [-s, 0]]) = s, expansion along the first row."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    for i in range(n):
        if not fs.is_zero(rows[i][i]):
            raise NotSkew("nonzero diagonal entry")
        for j in range(i + 1, n):
            if rows[i][j] != fs.neg(rows[j][i]):
                raise NotSkew(f"entries ({i},{j}) and ({j},{i}) not opposite")
    if n % 2 == 1:
        return fs.zero()

    def pf(idx):
        if not idx:
            return fs.one()
        i0 = idx[0]
        acc = fs.zero()
        for t in range(1, len(idx)):
            c = rows[i0][idx[t]]
            if fs.is_zero(c):
                continue
            rest = idx[1:t] + idx[t + 1:]
            term = fs.mul(c, pf(rest))
            # expansion sign (-1)^(t+1) on the t-th remaining column
            acc = fs.add(acc, term if t % 2 == 1 else fs.neg(term))
        return acc

    return pf(tuple(range(n)))


def projective_points(fs, b):
    """Monic representatives of P^{b-1}(F_q): first nonzero coordinate 1,
    in odometer order of the free coordinates."""
    pts = []
    one, zero = fs.one(), fs.zero()
    els = fs.elements()
    for lead in range(b):
        # coordinates: zero^lead, 1, then b-lead-1 free slots
        free = b - lead - 1
        for n in range(fs.q**free):
            tail = []
            t = n
            for _ in range(free):
                tail.append(els[t % fs.q])
                t //= fs.q
            tail.reverse()
            pts.append((zero,) * lead + (one,) + tuple(tail))
    return pts


def projective_rank_census(B, budget=10**9):
    """Counts of each rank over P^{b-1}(F_q) plus the line condition:
    does every projective line contain a point of full rank?"""
    fs = B.fs
    b = B.nvars
    if b < 1:
        return {}, True
    if fs.q**b > budget:
        raise BudgetExceeded(f"q^b = {fs.q**b} exceeds budget {budget}")
    pts = projective_points(fs, b)
    census = {}
    rk_of = {}
    for pt in pts:
        r = rank(B.evaluate(pt), fs)
        census[r] = census.get(r, 0) + 1
        rk_of[pt] = r
    full = B.rows
    if b == 1:
        return census, True
    # every projective line must contain a point of rank `full`
    seen = set()
    els = fs.elements()
    pts_list = list(rk_of)
    for i1 in range(len(pts_list)):
        for i2 in range(i1 + 1, len(pts_list)):
            p1, p2 = pts_list[i1], pts_list[i2]
            line = set()
            line.add(p2)
            for t in els:
                v = tuple(fs.add(x, fs.mul(t, y)) for x, y in zip(p1, p2))
                # renormalize to the monic representative
                lead = next((c for c in v if not fs.is_zero(c)), None)
                assert lead is not None
                inv = fs.inv(lead)
                line.add(tuple(fs.mul(inv, c) for c in v))
            key = frozenset(line)
            if key in seen:
                continue
            seen.add(key)
            if not any(rk_of[pt] == full for pt in line):
                return census, False
    return census, True
