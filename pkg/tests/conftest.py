"""Shared table builders for the test suite."""

from pgc import (
    make_field,
    ModRing,
    LieRing,
    free_table,
    boston_isaacs_table,
    quadric_table,
    isaacs_cd_table,
    fm_table,
)


def heisenberg(ring):
    return LieRing(ring, 3, {(0, 1): {2: 1}}, "heisenberg")


def field_pool():
    """Small field tables with class < p, one per shape we care about."""
    return [
        heisenberg(make_field(3)),
        heisenberg(make_field(5)),
        heisenberg(make_field(3, 2)),
        free_table(2, 3, make_field(5)),
        free_table(3, 2, make_field(3)),
        free_table(2, 4, make_field(5)),
        quadric_table(3),
        boston_isaacs_table(1, 5),
        boston_isaacs_table(3, 7),
        isaacs_cd_table([1, 2], 3),
        fm_table(2, 3, 5),
        fm_table(1, 2, 3),
    ]


def prime_field_pool():
    """The GF(p) members, usable by both the matrix and the dual route."""
    return [t for t in field_pool()
            if getattr(t.ring, "f", 0) == 1]


def dual_pool():
    """GF(p) members cheap enough for the character side of the dual
    route, which walks |g/z| x |g'| pairs in pure Python."""
    from pgc import centre, derived
    out = []
    for t in prime_field_pool():
        cost = t.ring.q ** (t.h - centre(t).dim) * t.ring.q ** derived(t).dim
        if cost <= 3 * 10**6:
            out.append(t)
    return out


def modular_pool():
    return [
        heisenberg(ModRing(3, 2)),
        heisenberg(ModRing(5, 1)),
        LieRing(ModRing(3, 2), 4,
                {(0, 1): {2: 1}, (0, 3): {2: 3}}, "fattened heisenberg Z/9"),
    ]
