"""Command-line surface: the `.lie` file format and the `pgc` tool.

File grammar (line-oriented, `#` starts a comment):

    ring p=<prime> [f=<deg>] [e=<exp>]     f and e mutually exclusive; default f=1
    dim <h>
    name <string>
    bracket <i> <j> : <coeff> <k> [<coeff> <k> ...]

Bracket lines are 1-based and mean [e_i, e_j] = sum coeff * e_k; each
unordered pair may appear at most once (a second occurrence is rejected
even when numerically consistent).  Coefficients are integers, or
`(a0,a1,...)` tuples of integers when f > 1.

Exit codes: 0 success (for `verify`: all paths agree), 1 verification
mismatch, 2 invalid input, 3 budget exceeded.
"""

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .field import make_field, is_prime
from .liecore import (
    ModRing,
    LieRing,
    is_field,
    validate,
    centre,
    derived,
    lower_central_series,
    adapt_basis,
    AntisymmetryViolation,
    JacobiViolation,
    NotNilpotent,
)
from .commat import BudgetExceeded, build_commutator_matrices
from .enumctr import (
    DEFAULT_BUDGET,
    ClassTooLarge,
    CountVector,
    rank_distribution,
    vectors_theoremB,
    vectors_dual,
    class_number,
    poly_fit,
    _exact_div,
)
from .freenil import (
    witt,
    free_table,
    class_vector_closed,
    class_number_closed,
    char_vector_class2,
    fixture_vectors,
    UnknownFixture,
    ExceptionalCase,
)
from .lazard import (
    DEFAULT_ORACLE_BUDGET,
    conjugacy_census,
    coadjoint_census,
    NonSquareOrbit,
)
from .catalog import (
    CATALOG_NAMES,
    build_entry,
    pfaffian_case_vectors,
    HypothesesFailed,
    ZeroAlpha,
)


class LieSyntaxError(SyntaxError):
    """Malformed `.lie` line; .line holds the 1-based line number."""

    def __init__(self, line, why):
        super().__init__(f"line {line}: {why}")
        self.line = line


class DuplicateBracket(ValueError):
    """The unordered pair (i, j) was given twice (1-based)."""

    def __init__(self, i, j):
        super().__init__(f"bracket pair ({i},{j}) given more than once")
        self.pair = (i, j)


class BadCoefficient(ValueError):
    pass


# ---------------------------------------------------------------------------
# .lie parsing / emission


def _parse_coeff(tok, ring, line):
    if tok.startswith("("):
        if not tok.endswith(")"):
            raise BadCoefficient(f"line {line}: unterminated tuple {tok!r}")
        if not (is_field(ring) and ring.f > 1):
            raise BadCoefficient(
                f"line {line}: tuple coefficient {tok!r} needs f > 1")
        body = tok[1:-1]
        try:
            digits = [int(s) for s in body.split(",")] if body else []
        except ValueError:
            raise BadCoefficient(f"line {line}: bad tuple {tok!r}")
        if not 0 < len(digits) <= ring.f:
            raise BadCoefficient(
                f"line {line}: tuple {tok!r} has {len(digits)} entries, "
                f"field degree is {ring.f}")
        digits += [0] * (ring.f - len(digits))
        return tuple(d % ring.p for d in digits)
    try:
        return int(tok)
    except ValueError:
        raise BadCoefficient(f"line {line}: {tok!r} is not a coefficient")


def parse_lie(text):
    """Parse `.lie` text into a LieRing.  Raises LieSyntaxError,
    DuplicateBracket, or BadCoefficient."""
    ring = None
    dim = None
    name = ""
    brackets = {}
    seen = set()
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "ring":
            if ring is not None:
                raise LieSyntaxError(no, "second ring line")
            kv = {}
            for tok in toks[1:]:
                m = re.fullmatch(r"(p|f|e)=(\d+)", tok)
                if m is None or m.group(1) in kv:
                    raise LieSyntaxError(no, f"bad ring parameter {tok!r}")
                kv[m.group(1)] = int(m.group(2))
            if "p" not in kv:
                raise LieSyntaxError(no, "ring needs p=<prime>")
            if "f" in kv and "e" in kv:
                raise LieSyntaxError(no, "f and e are mutually exclusive")
            p = kv["p"]
            if not is_prime(p):
                raise LieSyntaxError(no, f"p = {p} is not prime")
            if "e" in kv:
                if kv["e"] < 1:
                    raise LieSyntaxError(no, "e must be >= 1")
                ring = ModRing(p, kv["e"])
            else:
                f = kv.get("f", 1)
                if f < 1:
                    raise LieSyntaxError(no, "f must be >= 1")
                ring = make_field(p, f)
        elif head == "dim":
            if dim is not None:
                raise LieSyntaxError(no, "second dim line")
            if len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise LieSyntaxError(no, "dim needs one positive integer")
            dim = int(toks[1])
        elif head == "name":
            name = line[len("name"):].strip()
        elif head == "bracket":
            if ring is None or dim is None:
                raise LieSyntaxError(no, "bracket before ring/dim header")
            if len(toks) < 4 or toks[3] != ":":
                raise LieSyntaxError(no, "expected `bracket <i> <j> : ...`")
            try:
                i, j = int(toks[1]), int(toks[2])
            except ValueError:
                raise LieSyntaxError(no, "bracket indices must be integers")
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise LieSyntaxError(no, f"index out of range 1..{dim}")
            if i == j:
                raise LieSyntaxError(no, f"[e_{i}, e_{i}] is identically 0")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DuplicateBracket(i, j)
            seen.add(key)
            rest = toks[4:]
            if not rest or len(rest) % 2:
                raise LieSyntaxError(no, "expected <coeff> <k> pairs")
            row = {}
            for ct, kt in zip(rest[0::2], rest[1::2]):
                c = _parse_coeff(ct, ring, no)
                if not kt.isdigit() or not 1 <= int(kt) <= dim:
                    raise LieSyntaxError(no, f"target {kt!r} out of range")
                k = int(kt) - 1
                if k in row:
                    raise LieSyntaxError(no, f"target e_{kt} repeated")
                row[k] = c
            brackets[(i - 1, j - 1)] = row
        else:
            raise LieSyntaxError(no, f"unknown directive {head!r}")
    if ring is None:
        raise LieSyntaxError(0, "missing ring line")
    if dim is None:
        raise LieSyntaxError(0, "missing dim line")
    return LieRing(ring, dim, brackets, name)


def _fmt_coeff(c, ring):
    if isinstance(c, tuple):
        return "(" + ",".join(str(d) for d in c) + ")"
    return str(c)


def emit_lie(table):
    """Canonical `.lie` text: name, ring, dim, then brackets with i < j
    ascending and targets ascending.  parse -> emit is the identity on
    this format."""
    out = []
    if table.name:
        out.append(f"name {table.name}")
    r = table.ring
    if is_field(r):
        out.append(f"ring p={r.p}" + (f" f={r.f}" if r.f > 1 else ""))
    else:
        out.append(f"ring p={r.p} e={r.e}")
    out.append(f"dim {table.h}")
    for ij in sorted(table.lam):
        row = table.lam[ij]
        parts = " ".join(
            f"{_fmt_coeff(row[k], r)} {k + 1}" for k in sorted(row))
        out.append(f"bracket {ij[0] + 1} {ij[1] + 1} : {parts}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# output helpers


def _diag(msg):
    print(f"pgc: error: {msg}", file=sys.stderr)


def _render(cc, ch, k, p):
    lines = []
    if cc is not None:
        lines += [f"size {p}^{i} : {n}" for i, n in sorted(cc.items())]
    if ch is not None:
        lines += [f"degree {p}^{i} : {n}" for i, n in sorted(ch.items())]
    lines.append(f"k = {k}")
    return "\n".join(lines)


def _f_or_e(ring):
    if is_field(ring):
        return f"f={ring.f}"
    return f"e={ring.e}"


def _json_obj(table, cc, ch, k, method):
    def vec(v):
        return None if v is None else {str(i): n for i, n in sorted(v.items())}

    return {
        "name": table.name,
        "p": table.ring.p,
        "f_or_e": _f_or_e(table.ring),
        "class_vector": vec(cc),
        "char_vector": vec(ch),
        "k": k,
        "method": method,
    }


def _print_json(obj):
    print(json.dumps(obj, separators=(", ", ": ")))


def _entries(v):
    """Plain {exponent: count} dict from a CountVector or dict."""
    if v is None:
        return None
    if isinstance(v, CountVector):
        return dict(v.entries)
    return dict(v)


class BadInput(ValueError):
    pass


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_lie(fh.read())
    except OSError as e:
        raise BadInput(str(e))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_field(args):
    fs = make_field(args.p, args.f)
    print(f"GF({fs.q})" + (f" = GF({fs.p}^{fs.f})" if fs.f > 1 else ""))
    if fs.f > 1:
        terms = []
        for d in range(fs.f, -1, -1):
            c = fs.modulus[d]
            if c == 0:
                continue
            mono = "1" if d == 0 else ("x" if d == 1 else f"x^{d}")
            terms.append(mono if (c == 1 and d > 0) else
                         (str(c) if d == 0 else f"{c} {mono}"))
        print("modulus " + " + ".join(terms))
    print(f"elements {fs.q}")
    return 0


def _cmd_analyze(args):
    t = _load(args.file)
    validate(t)
    series, c = lower_central_series(t)
    z = centre(t)
    d = derived(t)
    if t.name:
        print(f"name {t.name}")
    print(f"ring {t.ring!r}")
    print(f"dim {t.h}")
    print(f"class {c}")
    if is_field(t.ring):
        print(f"centre dim {z.dim}")
        print(f"derived dim {d.dim}")
    else:
        print(f"centre order {z.order()}")
        print(f"derived order {d.order()}")
    if is_field(t.ring):
        ab, adapted = adapt_basis(t)
        A, B = build_commutator_matrices(adapted, ab.a, ab.b)
        print(f"a = {ab.a}  b = {ab.b}")
        print("A(X):")
        print(str(A))
        print("B(Y):")
        print(str(B))
    return 0


def _ranks_threaded(M, budget, threads):
    with ThreadPoolExecutor(max_workers=threads) as ex:
        parts = list(
            ex.map(lambda w: rank_distribution(M, budget, w, threads),
                   range(threads)))
    merged = {}
    for part in parts:
        for i, n in part.items():
            merged[i] = merged.get(i, 0) + n
    return merged


def _vectors_matrix(t, budget, threads):
    if threads <= 1:
        return vectors_theoremB(t, budget)
    # same arithmetic as the single-worker path, ranks merged over workers
    fs = t.ring
    ab, adapted = adapt_basis(t)
    A, B = build_commutator_matrices(adapted, ab.a, ab.b)
    _, c = lower_central_series(t)
    if c >= fs.p:
        raise ClassTooLarge(f"nilpotency class {c} >= p = {fs.p}")
    q, f = fs.q, fs.f
    mu = _ranks_threaded(A, budget, threads)
    raw = _ranks_threaded(B, budget, threads)
    assert all(r % 2 == 0 for r in raw), "odd rank for a skew matrix"
    nu = {r // 2: n for r, n in raw.items()}
    cc = {i * f: _exact_div(n * q ** (t.h - ab.a), q**i)
          for i, n in mu.items()}
    ch = {i * f: _exact_div(n * q ** (t.h - ab.b), q ** (2 * i))
          for i, n in nu.items()}
    return (CountVector(cc, q=q, p=fs.p), CountVector(ch, q=q, p=fs.p))


def _cmd_vectors(args):
    t = _load(args.file)
    validate(t)
    method = args.method
    if method == "auto":
        method = "matrix" if is_field(t.ring) else "dual"
    if method == "matrix":
        if not is_field(t.ring):
            raise BadInput("matrix method requires field coefficients")
        cc, ch = _vectors_matrix(t, args.budget, args.threads)
    else:
        if is_field(t.ring) and t.ring.f > 1:
            raise BadInput("dual method requires GF(p) or Z/p^e coefficients")
        cc, ch = vectors_dual(t, args.budget)
    k = cc.total()
    if args.json:
        _print_json(_json_obj(t, cc, ch, k, method))
    else:
        print(_render(cc, ch, k, t.ring.p))
    return 0


def _cmd_free(args):
    q = args.p ** args.f
    table = None
    if args.emit or args.enumerate or args.json:
        table = free_table(args.r, args.c, make_field(args.p, args.f))
    if args.enumerate:
        # preflight: the centre of the free table is the top layer, so the
        # two point counts are q^a and q^b with a, b from Witt numbers
        a = sum(witt(args.r, i) for i in range(1, args.c))
        b = sum(witt(args.r, i) for i in range(2, args.c + 1))
        worst = max(q**a, q**b)
        if worst > args.budget:
            raise BudgetExceeded(
                f"q^{max(a, b)} = {worst} exceeds budget {args.budget}")
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(emit_lie(table))
        print(f"wrote {args.emit}")
        if not (args.closed_form or args.enumerate):
            return 0
    if args.enumerate:
        cc, ch = vectors_theoremB(table, args.budget)
        k = cc.total()
        method = "matrix"
    else:
        cc = class_vector_closed(args.r, args.c, q)
        k = cc.total()
        method = "closed"
        if args.c == 2:
            ch = char_vector_class2(args.r, q)
        else:
            try:
                ch = fixture_vectors(args.r, args.c, q)
            except UnknownFixture:
                ch = None
    if args.json:
        _print_json(_json_obj(table, cc, ch, k, method))
    else:
        print(_render(cc, ch, k, args.p))
    return 0


def _cmd_oracle(args):
    t = _load(args.file)
    validate(t)
    both = not (args.classes or args.orbits)
    cc = ch = None
    if args.classes or both:
        cc = conjugacy_census(t, args.budget)
    if args.orbits or both:
        ch = coadjoint_census(t, args.budget)
    if cc is not None and ch is not None and cc.total() != ch.total():
        print(f"oracle mismatch: {cc.total()} classes vs "
              f"{ch.total()} irreducible characters")
        return 1
    k = (cc or ch).total()
    print(_render(cc, ch, k, t.ring.p))
    return 0


def _cmd_catalog(args):
    params = {}
    if args.name == "boston_isaacs":
        params = {"alpha": _require(args.alpha, "--alpha"),
                  "p": _require(args.p, "-p")}
    elif args.name == "quadric":
        params = {"q": _require(args.q, "-q")}
    elif args.name == "isaacs_cd":
        raw = _require(args.I, "-I")
        try:
            params = {"I": [int(s) for s in raw.split(",")],
                      "p": _require(args.p, "-p")}
        except ValueError:
            raise BadInput(f"bad index set {raw!r}; expected e.g. 1,3")
    elif args.name == "fm":
        params = {"l": _require(args.l, "-l"), "n": _require(args.n, "-n"),
                  "p": _require(args.p, "-p")}
    entry = build_entry(args.name, **params)
    print(f"name {entry.table.name}")
    print(f"dim {entry.table.h}")
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(emit_lie(entry.table))
        print(f"wrote {args.emit}")
        return 0
    exp = entry.expected
    if "cc" in exp:
        print(_render(exp["cc"], exp["ch"], exp["k"], entry.table.ring.p))
    if "n" in exp:
        print(f"n = {exp['n']}")
    if "cd" in exp:
        print("cd : " + " ".join(str(d) for d in sorted(exp["cd"])))
    if "cs" in exp:
        print("cs : " + " ".join(str(s) for s in sorted(exp["cs"])))
    return 0


def _require(val, flag):
    if val is None:
        raise BadInput(f"catalog family needs {flag}")
    return val


def _poly_str(poly):
    terms = []
    for d in range(poly.degree(), -1, -1):
        c = poly.coeffs[d] if d < len(poly.coeffs) else 0
        if c == 0:
            continue
        mag = abs(c)
        mono = "1" if d == 0 else ("q" if d == 1 else f"q^{d}")
        body = mono if (mag == 1 and d > 0) else (
            str(mag) if d == 0 else f"{mag} {mono}")
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def _cmd_fit(args):
    try:
        nodes = [int(s) for s in args.at.split(",")]
    except ValueError:
        raise BadInput(f"bad node list {args.at!r}")
    if len(nodes) < 2:
        raise BadInput("need at least two interpolation nodes")
    r, c = args.r, args.c
    if args.target == "k":
        samples = [(q, class_number_closed(r, c, q)) for q in nodes]
        poly = poly_fit(samples, integral=True)
        print(f"k = {_poly_str(poly)}")
        return 0
    if args.target == "cc":
        vecs = {q: class_vector_closed(r, c, q) for q in nodes}
        label = "cc"
    else:
        if c == 2:
            vecs = {q: char_vector_class2(r, q) for q in nodes}
        else:
            vecs = {q: fixture_vectors(r, c, q) for q in nodes}
        label = "ch"
    keys = sorted({i for v in vecs.values() for i in v.entries})
    for i in keys:
        samples = [(q, vecs[q].entries.get(i, 0)) for q in nodes]
        poly = poly_fit(samples, integral=True)
        print(f"{label}[{i}] = {_poly_str(poly)}")
    return 0


_FREE_NAME = re.compile(r"f\((\d+),(\d+)\)$")
_QUADRIC_NAME = re.compile(r"quadric\((\d+)\)$")
_BI_NAME = re.compile(r"g_alpha\((\d+) mod (\d+)\)$")


def _closed_paths(t):
    """(label, cc, ch, k) rows for tables recognized by name."""
    rows = []
    m = _FREE_NAME.fullmatch(t.name)
    if m and is_field(t.ring):
        r, c = int(m.group(1)), int(m.group(2))
        cc = class_vector_closed(r, c, t.ring.q)
        ch = None
        if c == 2:
            ch = char_vector_class2(r, t.ring.q)
        else:
            try:
                ch = fixture_vectors(r, c, t.ring.q)
            except UnknownFixture:
                pass
        rows.append(("closed", cc, ch, cc.total()))
    m = _QUADRIC_NAME.fullmatch(t.name)
    if m and is_field(t.ring):
        exp = build_entry("quadric", q=t.ring.q).expected
        rows.append(("closed", exp["cc"], exp["ch"], exp["k"]))
    m = _BI_NAME.fullmatch(t.name)
    if m and is_field(t.ring):
        cc, ch, k, _ = pfaffian_case_vectors(t)
        rows.append(("formula", cc, ch, k))
    return rows


def _cmd_verify(args):
    t = _load(args.file)
    validate(t)
    rows = []  # (label, cc entries or None, ch entries or None, k)
    skipped = []

    def attempt(label, fn):
        try:
            rows.append((label,) + fn())
        except BudgetExceeded:
            skipped.append((label, "budget"))
        except ClassTooLarge as e:
            skipped.append((label, str(e)))

    if is_field(t.ring):
        def theoremB():
            cc, ch = vectors_theoremB(t, args.budget)
            k, _ = class_number(t, args.budget)
            return cc, ch, k
        attempt("theoremB", theoremB)

    if not is_field(t.ring) or t.ring.f == 1:
        def dual():
            cc, ch = vectors_dual(t, args.budget)
            return cc, ch, cc.total()
        attempt("dual", dual)

    try:
        for row in _closed_paths(t):
            rows.append(row)
    except ClassTooLarge as e:
        skipped.append(("closed", str(e)))

    attempt("conjugacy", lambda: (
        lambda cc: (cc, None, cc.total()))(conjugacy_census(t, args.oracle_budget)))
    attempt("coadjoint", lambda: (
        lambda ch: (None, ch, ch.total()))(coadjoint_census(t, args.oracle_budget)))

    if not rows:
        _diag("no verification path applies within budget")
        return 3

    mismatches = []
    ref_cc = ref_ch = ref_k = None
    for label, cc, ch, k in rows:
        cc, ch = _entries(cc), _entries(ch)
        if cc is not None:
            if ref_cc is None:
                ref_cc = (label, cc)
            elif cc != ref_cc[1]:
                mismatches.append(
                    f"class vectors differ: {ref_cc[0]} {ref_cc[1]} "
                    f"vs {label} {cc}")
        if ch is not None:
            if ref_ch is None:
                ref_ch = (label, ch)
            elif ch != ref_ch[1]:
                mismatches.append(
                    f"char vectors differ: {ref_ch[0]} {ref_ch[1]} "
                    f"vs {label} {ch}")
        if ref_k is None:
            ref_k = (label, k)
        elif k != ref_k[1]:
            mismatches.append(f"k differs: {ref_k[0]} {ref_k[1]} vs {label} {k}")

    for label, _, _, k in rows:
        print(f"path {label:<10} k = {k}")
    for label, why in skipped:
        print(f"path {label:<10} skipped ({why})")
    if mismatches:
        for m in mismatches:
            print(f"MISMATCH: {m}")
        return 1
    print(f"verify: {len(rows)} paths agree")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="pgc",
        description="conjugacy classes and character degrees of finite "
                    "p-groups from Lie ring structure constants")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field", help="describe GF(p^f) and its modulus")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-f", type=int, default=1)
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("analyze", help="table invariants and the matrices")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("vectors", help="class/character vectors and k")
    p.add_argument("file")
    p.add_argument("--method", choices=("auto", "matrix", "dual"),
                   default="auto")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_vectors)

    p = sub.add_parser("free", help="free nilpotent tables and closed forms")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-f", type=int, default=1)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--closed-form", action="store_true")
    g.add_argument("--enumerate", action="store_true")
    p.add_argument("--emit", metavar="FILE")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_free)

    p = sub.add_parser("oracle", help="brute-force class/orbit censuses")
    p.add_argument("file")
    p.add_argument("--classes", action="store_true")
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("catalog", help="worked families from the literature")
    p.add_argument("name", choices=CATALOG_NAMES)
    p.add_argument("--alpha", type=int)
    p.add_argument("-p", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("-I", metavar="I1,I2,...")
    p.add_argument("-l", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--emit", metavar="FILE")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("fit", help="interpolate closed forms as polynomials in q")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--target", choices=("cc", "ch", "k"), required=True)
    p.add_argument("--at", required=True, metavar="q1,q2,...")
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("verify", help="cross-check every applicable method")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.set_defaults(func=_cmd_verify)

    return ap


def run(argv=None):
    """Parse argv and dispatch; returns the exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except BudgetExceeded as e:
        _diag(e)
        return 3
    except (LieSyntaxError, DuplicateBracket, BadCoefficient, BadInput,
            AntisymmetryViolation, JacobiViolation, NotNilpotent,
            ClassTooLarge, UnknownFixture, ExceptionalCase,
            HypothesesFailed, ZeroAlpha) as e:
        _diag(e)
        return 2
    except NonSquareOrbit as e:
        _diag(e)
        return 1
    except ValueError as e:
        _diag(e)
        return 2


def main():
    sys.exit(run())
