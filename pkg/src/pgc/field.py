"""Exact arithmetic in GF(p^f) with deterministic element enumeration.

Elements are plain residues 0..p-1 when f = 1 and coordinate tuples of
length f (low degree first) when f > 1, so they serialize directly.
The modulus is the lexicographically least monic irreducible, which makes
every downstream enumeration reproducible bit for bit.
"""

from __future__ import annotations


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# polynomials over F_p: tuples of ints, low degree first, no trailing zeros

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        c = a[-1] % p
        if c:
            off = len(a) - 1 - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - c * m[i]) % p
        a.pop()
    return _ptrim(tuple(a))


def _ppowmod(a, n, m, p):
    r = (1,)
    a = _pmod(a, m, p)
    while n:
        if n & 1:
            r = _pmod(_pmul(r, a, p), m, p)
        a = _pmod(_pmul(a, a, p), m, p)
        n >>= 1
    return r


def _pgcd(a, b, p):
    while b:
        # make b monic before reducing
        inv = pow(b[-1], p - 2, p)
        b = tuple(c * inv % p for c in b)
        a, b = b, _pmod(a, b, p)
    return a


def _irreducible(poly, p):
    """poly monic of degree f >= 1 over F_p."""
    f = len(poly) - 1
    if f == 1:
        return True
    if f <= 3:
        # degree 2 or 3 is reducible iff it has a root
        return all(
            sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p != 0
            for x in range(p)
        )
    # Rabin: x^(p^f) = x mod poly, and gcd(x^(p^(f/d)) - x, poly) = 1
    # for every prime divisor d of f
    x = (0, 1)
    if _pmod(_psub(_ppowmod(x, p**f, poly, p), x, p), poly, p):
        return False
    d, ff, primes = 2, f, []
    while d * d <= ff:
        if ff % d == 0:
            primes.append(d)
            while ff % d == 0:
                ff //= d
        d += 1
    if ff > 1:
        primes.append(ff)
    for d in primes:
        g = _pgcd(poly, _psub(_ppowmod(x, p ** (f // d), poly, p), x, p), p)
        if len(g) - 1 > 0:
            return False
    return True


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return _ptrim(tuple((x - y) % p for x, y in zip(a, b)))


class FieldSpec:
    """GF(p^f). Carries all arithmetic; immutable once constructed."""

    def __init__(self, p, f, modulus):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus  # None when f = 1, else tuple of f+1 coeffs, monic
        if f > 1:
            # t^f = -(m_0 + m_1 t + ... + m_{f-1} t^{f-1})
            self._red = tuple((-c) % p for c in modulus[:f])

    def __repr__(self):
        if self.f == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.f}; modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    # -- element encoding ------------------------------------------------

    def zero(self):
        return 0 if self.f == 1 else (0,) * self.f

    def one(self):
        return 1 if self.f == 1 else (1,) + (0,) * (self.f - 1)

    def from_int(self, n):
        """n in [0, q): base-p digits, low degree first."""
        assert 0 <= n < self.q
        if self.f == 1:
            return n
        coords = []
        for _ in range(self.f):
            coords.append(n % self.p)
            n //= self.p
        return tuple(coords)

    def to_int(self, x):
        if self.f == 1:
            return x % self.p
        n = 0
        for c in reversed(x):
            n = n * self.p + c
        return n

    def embed(self, n):
        """Image of the integer n under Z -> GF(p^f)."""
        n %= self.p
        return n if self.f == 1 else (n,) + (0,) * (self.f - 1)

    # -- arithmetic ------------------------------------------------------

    def add(self, x, y):
        if self.f == 1:
            return (x + y) % self.p
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        if self.f == 1:
            return (-x) % self.p
        return tuple((-a) % self.p for a in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        p, f = self.p, self.f
        if f == 1:
            return (x * y) % p
        prod = [0] * (2 * f - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] = (prod[i + j] + a * b) % p
        for k in range(2 * f - 2, f - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, r in enumerate(self._red):
                    prod[k - f + i] = (prod[k - f + i] + c * r) % p
        return tuple(prod[:f])

    def smul(self, n, x):
        """Integer scalar times element."""
        n %= self.p
        if self.f == 1:
            return (n * x) % self.p
        return tuple((n * a) % self.p for a in x)

    def power(self, x, n):
        r = self.one()
        while n:
            if n & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            n >>= 1
        return r

    def inv(self, x):
        if x == self.zero():
            raise ZeroDivisionError("inversion of zero field element")
        if self.f == 1:
            return pow(x, self.p - 2, self.p)
        return self.power(x, self.q - 2)

    def is_zero(self, x):
        return x == self.zero()

    # -- enumeration -----------------------------------------------------

    def elements(self):
        """All q elements, lexicographic on coords high degree first.

        Starts 0, 1, then (for f > 1) t, t+1, ...
        """
        return [self.from_int(n) for n in range(self.q)]

    def fmt(self, x):
        """Serialization: bare int for f = 1, (a0,a1,...) otherwise."""
        if self.f == 1:
            return str(x)
        return "(" + ",".join(str(c) for c in x) + ")"


def make_field(p, f=1):
    """FieldSpec for GF(p^f) with the lexicographically least monic
    irreducible modulus, candidates ordered by (a_{f-1}, ..., a_0)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if f < 1:
        raise ValueError(f"extension degree f = {f} must be >= 1")
    if f == 1:
        return FieldSpec(p, 1, None)
    for m in range(p**f):
        digits = []
        for _ in range(f):
            digits.append(m % p)
            m //= p
        # digits[0] = a_0 ... digits[f-1] = a_{f-1}: iterating the integer
        # ascending orders candidates by (a_{f-1}, ..., a_0) left to right
        poly = tuple(digits) + (1,)
        if _irreducible(poly, p):
            return FieldSpec(p, f, poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable
