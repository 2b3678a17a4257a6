"""Interpolation constructions, the planar crossover, and a registry of figure gadgets."""

import cmath
from dataclasses import dataclass, field

from .grid import GridBuilder, brute_holant, bundle_view, fgate_signature
from .scalar import Exact, exact_sqrt, lift, scalar
from .signatures import DenseSignature, SymSignature, to_symmetric


class ConstructionError(ArithmeticError):
    pass


class InterpolationError(ArithmeticError):
    pass


# ------------------------------------------------------------ interpolation

@dataclass
class RecursiveConstruction:
    A: list
    g: tuple

    def __post_init__(self):
        A = self.A
        if len(A) == 4:
            A = [A[0:2], A[2:4]]
        g = self.g.entries if isinstance(self.g, SymSignature) else self.g
        if len(A) != 2 or any(len(r) != 2 for r in A) or len(g) != 2:
            raise ValueError("need a 2x2 matrix A and a unary g")
        vals = [scalar(v) for v in (A[0][0], A[0][1], A[1][0], A[1][1], g[0], g[1])]
        if not all(isinstance(v, Exact) for v in vals):
            vals = lift(vals)
        self.A = [vals[0:2], vals[2:4]]
        self.g = tuple(vals[4:6])

    def step(self, v):
        A = self.A
        return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])

    def iterates(self, count):
        """(x_s, y_s) for s = 0..count-1."""
        out = [self.g]
        while len(out) < count:
            out.append(self.step(out[-1]))
        return out[:count]


@dataclass
class InterpolationCheck:
    ok: object  # True, False, or None for indeterminate
    det: object = None
    trace: object = None
    diagnostics: list = field(default_factory=list)

    def __bool__(self):
        return self.ok is True


_UNITY_TRACES = (-2, -1, 0, 1, 2)


def _ratio_root_of_unity(A, max_order=24):
    """True / False / None for whether the eigenvalue ratio of A is a root of unity."""
    tr = A[0][0] + A[1][1]
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    if all(isinstance(v, Exact) for row in A for v in row):
        # rho + 1/rho = tr^2/det - 2 lies in Q(i); a root of unity of degree <= 2
        # over Q(i) has 2cos(2 pi k/n) rational, so s must be one of -2..2
        s = tr * tr / det - 2
        return s.is_real() and s.real in _UNITY_TRACES, "s = %s" % s
    t, d = complex(tr), complex(det)
    r = cmath.sqrt(t * t - 4 * d)
    a, b = (t + r) / 2, (t - r) / 2
    tol = 1e-9 * max(1.0, abs(a), abs(b))
    if abs(abs(a) - abs(b)) > tol:
        return False, "|alpha| = %.17g, |beta| = %.17g" % (abs(a), abs(b))
    rho = a / b
    for k in range(1, max_order + 1):
        if abs(rho ** k - 1) <= 1e-9:
            return True, "ratio has order %d" % k
    return None, "|alpha| = |beta| and no order <= %d" % max_order


def check_interpolation_conditions(rc):
    A = rc.A
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    tr = A[0][0] + A[1][1]
    res = InterpolationCheck(True, det, tr)
    if det.is_zero():
        res.ok = False
        res.diagnostics.append("det(A) = 0")
        return res
    g = rc.g
    if g[0].is_zero() and g[1].is_zero():
        res.ok = False
        res.diagnostics.append("g is zero")
    else:
        Ag = rc.step(g)
        if (g[0] * Ag[1] - g[1] * Ag[0]).is_zero():
            res.ok = False
            res.diagnostics.append("g is an eigenvector of A")
    unity, why = _ratio_root_of_unity(A)
    if unity is True:
        res.ok = False
        res.diagnostics.append("eigenvalue ratio is a root of unity (%s)" % why)
    elif unity is None:
        if res.ok:
            res.ok = None
        res.diagnostics.append("indeterminate: %s" % why)
    else:
        res.diagnostics.append("eigenvalue ratio is not a root of unity (%s)" % why)
    return res


def _solve_linear(M, b):
    """Gaussian elimination with pivoting on magnitude; works on either backend."""
    n = len(M)
    rows = [list(M[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(complex(rows[r][col])))
        if rows[piv][col].is_zero():
            raise InterpolationError("singular interpolation system")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        for r in range(n):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col] / p
                rows[r] = [a - f * c for a, c in zip(rows[r], rows[col])]
    return [rows[i][n] / rows[i][i] for i in range(n)]


@dataclass
class InterpolationResult:
    value: object
    coefficients: list
    points: list
    holants: list
    residual: float


def solve_interpolation(grid, f, rc, evaluator=brute_holant, vertices=None):
    """Recover Holant(grid) from instances where every f is replaced by the iterates of rc."""
    if vertices is None:
        f = f if isinstance(f, SymSignature) else SymSignature(f)
        vertices = [v for v, s in grid.vertices.items() if s == f]
    vertices = list(vertices)
    for v in vertices:
        if grid.vertices[v].arity != 1:
            raise ValueError("vertex %r is not unary" % (v,))
    x, y = grid.vertices[vertices[0]].entries if vertices else (None, None)
    n = len(vertices)
    pts = rc.iterates(n + 1)
    hs = []
    for xs, ys in pts:
        sub = {v: SymSignature([xs, ys]) for v in vertices}
        hs.append(evaluator(grid.with_signatures(sub)))
    M = [[xs ** i * ys ** (n - i) for i in range(n + 1)] for xs, ys in pts]
    exact = all(isinstance(v, Exact) for row in M for v in row) and all(isinstance(h, Exact) for h in hs)
    if not exact:
        M = [[scalar(v).to_approx() for v in row] for row in M]
        hs = [scalar(h).to_approx() for h in hs]
    c = _solve_linear(M, hs)
    resid = max(abs(complex(sum((M[s][i] * c[i] for i in range(n + 1)), M[s][0] * 0) - hs[s]))
                for s in range(n + 1))
    if exact and resid != 0:
        raise InterpolationError("exact solve left a residual")
    if not exact and resid > 1e-8 * max(1.0, max(abs(complex(h)) for h in hs)):
        raise InterpolationError("residual %.3g above tolerance" % resid)
    if n == 0:
        value = c[0]
    else:
        value = sum((c[i] * x ** i * y ** (n - i) for i in range(n + 1)), c[0] * 0)
    return InterpolationResult(value, c, pts, hs, resid)


def run_unary_interpolation(grid, f, rc, evaluator=brute_holant, vertices=None):
    chk = check_interpolation_conditions(rc)
    if chk.ok is not True:
        raise InterpolationError("construction fails the conditions: " + "; ".join(chk.diagnostics))
    return solve_interpolation(grid, f, rc, evaluator, vertices).value


# ---------------------------------------------------------------- crossover

@dataclass
class CrossoverParams:
    c: object
    x: object
    y: object
    t: object
    z: object


def _sqrt(v):
    if isinstance(v, Exact):
        r = exact_sqrt(v)
        if r is not None:
            return r
        v = v.to_approx()
    return v.sqrt()


def _lex_key(v):
    z = complex(v)
    return (round(z.real, 12), round(z.imag, 12))


def crossover_params(c):
    c = scalar(c)
    if (c - 1).is_zero():
        raise ValueError("no crossover parameters exist for c = 1")
    x = 1 + _sqrt(16 / (c - 1))
    if not isinstance(x, Exact):
        c = c.to_approx() if isinstance(c, Exact) else c
    if (x + 3).is_zero():
        z = x * 0
    else:
        K = x * (x + 3) / (x - 1)
        r = _sqrt(1 - K)
        if not isinstance(r, Exact) and isinstance(K, Exact):
            K = K.to_approx()
        z = min(((2 - K) + 2 * r) / K, ((2 - K) - 2 * r) / K, key=_lex_key)
    if not isinstance(z, Exact) and isinstance(x, Exact):
        x, c = x.to_approx(), c.to_approx()
    y = z / x
    t = 4 / ((1 + z) * (1 + z))
    return CrossoverParams(c, x, y, t, z)


def _sig(vals):
    vals = [scalar(v) for v in vals]
    if not all(isinstance(v, Exact) for v in vals):
        vals = lift(vals)
    return SymSignature(vals)


def crossover_gadget(x, y, t, c):
    """Nine-vertex F-gate: center [t,0,1,0,c/t], corners [x,0,1,0] carry the four
    external edges, mid-side vertices [y,0,1,0] link corners and center."""
    b = GridBuilder()
    b.add("center", _sig([t, 0, 1, 0, c / t]))
    for i in range(4):
        b.add(("K", i), _sig([x, 0, 1, 0]))
        b.add(("M", i), _sig([y, 0, 1, 0]))
    # boundary cycle K0 M0 K1 M1 K2 M2 K3 M3
    for i in range(4):
        b.connect(("K", i), ("M", i))
        b.connect(("M", i), ("K", (i + 1) % 4))
    for i in range(4):
        b.connect(("M", i), "center")
    for i in range(4):
        b.dangle(("K", i))
    return b.build()


def crossover_closed_forms(x, y, t, c):
    A = x ** 4 * y ** 4 * t + t + 4 * x ** 3 * y ** 2 + 4 * x + 4 * x ** 2 * y + 2 * c * x ** 2 / t
    B = 2 * y ** 2 * t + 12 * y + 2 * c / t
    C = 2 * x * y ** 2 * t + 4 * x ** 2 * y ** 2 + 4 + 4 * x * y + 2 * c * x / t
    D = x ** 2 * y ** 3 * t + y * t + 3 * x ** 2 * y ** 2 + 3 + 6 * x * y + 2 * c * x / t
    return A, B, C, D


CROSS_SUPPORT = ((0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 1, 1, 1))


def crossover_entries(sig):
    """(A, B, C, D) read off a contracted gadget: X0000, X1111, X0101, X0011."""
    return sig.value((0, 0, 0, 0)), sig.value((1, 1, 1, 1)), sig.value((0, 1, 0, 1)), sig.value((0, 0, 1, 1))


def crossover_signature(p, tol=1e-9, check=True):
    """Contract the gadget; with check, verify D = 0 and A = B = C and return X normalized."""
    sig = fgate_signature(crossover_gadget(p.x, p.y, p.t, p.c))
    if not check:
        return sig
    rep = crossover_report(p, sig)
    if rep["residual"] > tol:
        raise ConstructionError("crossover identities fail: residual %.3g" % rep["residual"])
    return rep["normalized"]


def crossover_report(p, sig=None):
    if sig is None:
        sig = fgate_signature(crossover_gadget(p.x, p.y, p.t, p.c))
    A, B, C, D = crossover_entries(sig)
    target = 4 * (1 - p.x * p.y) ** 2 / (1 - p.x)
    scale = max(1.0, abs(complex(target)))
    res = max(abs(complex(D)), abs(complex(A - B)), abs(complex(A - C)),
              abs(complex(A - target))) / scale
    odd = max(abs(complex(sig.table[i])) for i in range(16) if bin(i).count("1") % 2)
    norm = DenseSignature(4, [v / A for v in sig.table]) if not A.is_zero() else None
    cross = max(abs(complex(norm.value(b) - (1 if b in CROSS_SUPPORT else 0)))
                for b in _bits4()) if norm is not None else float("inf")
    return {"A": A, "B": B, "C": C, "D": D, "expected": target,
            "residual": max(res, odd / scale, cross), "normalized": norm, "signature": sig}


def _bits4():
    return [tuple((w >> (3 - k)) & 1 for k in range(4)) for w in range(16)]


def cross_function(one=1):
    one = scalar(one)
    return DenseSignature(4, [one if b in CROSS_SUPPORT else one * 0 for b in _bits4()])


# ---------------------------------------------------------- named gadgets

def _as_sym(d):
    s = to_symmetric(d)
    return d if s is None else s


def join_a000b(a, b):
    """Two copies of [a,0,0,0,b] joined along three edge pairs."""
    g = GridBuilder()
    f = SymSignature([a, 0, 0, 0, b])
    g.add(0, f)
    g.add(1, f)
    g.dangle(0)
    for _ in range(3):
        g.connect(0, 1)
    g.dangle(1)
    return _as_sym(fgate_signature(g.build()))


def _fig2_gate(x):
    F = SymSignature([0, 1, 0, x])
    g = GridBuilder()
    g.add("F1", F)
    g.add("F2", F)
    g.dangle("F1", "x1")
    g.dangle("F2", "x2")
    g.dangle("F1", "y1")
    g.dangle("F2", "y2")
    g.connect("F1", "F2")
    return g.build()


def fig2_H(x):
    """H(x1,x2,y1,y2) = sum_z F(x1,y1,z) F(x2,y2,z) with F = [0,1,0,x]."""
    return fgate_signature(_fig2_gate(x))


def fig2_H_bundled(x):
    return bundle_view(fig2_H(x), [(0, 1), (2, 3)])


def fig3_H2i(i):
    """H_{2i} built as a chain of 2i copies of [0,0,1,0,0]."""
    if i < 1:
        raise ValueError("i >= 1")
    F = SymSignature([0, 0, 1, 0, 0])
    g = GridBuilder()
    g.add(("A", 0), F)
    g.add(("B", 0), F)
    g.dangle(("A", 0), "x1")
    g.dangle(("A", 0), "x2")
    g.connect(("A", 0), ("B", 0))
    g.connect(("A", 0), ("B", 0))
    tail = ("B", 0)
    for j in range(1, i):
        # H_{2j+2}(x, y) = sum H_{2j}(x, w) H_2(y, w): the new block's B side meets w
        g.add(("B", j), F)
        g.add(("A", j), F)
        g.connect(tail, ("B", j))
        g.connect(tail, ("B", j))
        g.connect(("B", j), ("A", j))
        g.connect(("B", j), ("A", j))
        tail = ("A", j)
    g.dangle(tail, "y1")
    g.dangle(tail, "y2")
    return fgate_signature(g.build())


def fig4_matrix(a):
    a = scalar(a)
    return [[3 * (a * a + 1), a ** 3 + a], [3 * (a ** 3 + a), a ** 6 + 1]]


def fig4_step(N, a):
    """One hexagon layer of [0,1,0,a] vertices around a ternary gate N."""
    F = SymSignature([0, 1, 0, a])
    g = GridBuilder()
    g.add("N", N)
    for j in range(6):
        g.add(j, F)
    for j in range(6):
        g.connect(j, (j + 1) % 6)
    for j in (0, 2, 4):
        g.connect("N", j)
    for j in (1, 3, 5):
        g.dangle(j)
    return _as_sym(fgate_signature(g.build()))


def fig4_chain(a, steps=1):
    N = SymSignature([0, 1, 0, a])
    for _ in range(steps):
        N = fig4_step(N, a)
    return N


def fig_1010(f, pin):
    """Center f pinned by a unary, three spokes to outer copies of f in a triangle."""
    f = f if isinstance(f, SymSignature) else SymSignature(f)
    u = pin if isinstance(pin, SymSignature) else SymSignature(pin)
    g = GridBuilder()
    g.add("u", u)
    g.add("c", f)
    for k in range(3):
        g.add(k, f)
    g.connect("u", "c")
    for k in range(3):
        g.connect("c", k)
    for k in range(3):
        g.connect(k, (k + 1) % 3)
    for k in range(3):
        g.dangle(k)
    return _as_sym(fgate_signature(g.build()))


def fig6_1a2b(a, b):
    """Two [1,0,0,b] nodes joined by two paths through [1,a,-1]."""
    P = SymSignature([1, a, -1])
    Q = SymSignature([1, 0, 0, b])
    g = GridBuilder()
    g.add("u", Q)
    g.add("v", Q)
    g.add("p", P)
    g.add("q", P)
    g.dangle("u")
    g.connect("u", "p")
    g.connect("u", "q")
    g.connect("p", "v")
    g.connect("q", "v")
    g.dangle("v")
    return _as_sym(fgate_signature(g.build()))


def fig7_g0(v):
    """Triangle of [v,1,0,0] vertices, one external edge each."""
    F = SymSignature([v, 1, 0, 0])
    g = GridBuilder()
    for k in range(3):
        g.add(k, F)
    for k in range(3):
        g.connect(k, (k + 1) % 3)
    for k in range(3):
        g.dangle(k)
    return _as_sym(fgate_signature(g.build()))


def fig8_g1(v):
    """Two [v,1,0,0] vertices joined by a double edge."""
    F = SymSignature([v, 1, 0, 0])
    g = GridBuilder()
    g.add(0, F)
    g.add(1, F)
    g.dangle(0)
    g.connect(0, 1)
    g.connect(0, 1)
    g.dangle(1)
    return _as_sym(fgate_signature(g.build()))


def lemma53_fan(a, j):
    """[1,0,1,0,...] of arity j+1 with j unaries [1,a] attached."""
    g = GridBuilder()
    g.add("c", SymSignature([1 if k % 2 == 0 else 0 for k in range(j + 2)]))
    for k in range(j):
        g.add(k, SymSignature([1, a]))
        g.connect(k, "c")
    g.dangle("c")
    return _as_sym(fgate_signature(g.build()))


def binary_chain(a, j):
    """Path of j copies of [1,0,a]."""
    g = GridBuilder()
    for k in range(j):
        g.add(k, SymSignature([1, 0, a]))
    g.dangle(0)
    for k in range(j - 1):
        g.connect(k, k + 1)
    g.dangle(j - 1)
    return _as_sym(fgate_signature(g.build()))


def _h2i_expected(i):
    big = 2 ** (2 * i - 1)
    tab = []
    for b in _bits4():
        if b in ((0, 0, 0, 0), (1, 1, 1, 1)):
            tab.append(1)
        elif b in ((0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)):
            tab.append(big)
        else:
            tab.append(0)
    return DenseSignature(4, tab)


def _fig4_expected(a, steps=1):
    a = scalar(a)
    M = fig4_matrix(a)
    v = (a * 0 + 1, a)
    for _ in range(steps):
        v = (M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1])
    return SymSignature([0, v[0], 0, v[1]])


def _fan_expected(a, j):
    a = scalar(a)
    p, m = (1 + a) ** j / 2, (1 - a) ** j / 2
    return SymSignature([p + m, p - m])


def _fig2_expected(x):
    x = scalar(x)
    tab = []
    for x1, x2, y1, y2 in _bits4():
        tab.append(sum(SymSignature([0, 1, 0, x]).value((x1, y1, z)) * SymSignature([0, 1, 0, x]).value((x2, y2, z))
                       for z in (0, 1)))
    return DenseSignature(4, tab)


@dataclass
class NamedGadget:
    build: object
    expected: object
    params: tuple
    note: str = ""


REGISTRY = {
    "join-a000b": NamedGadget(join_a000b, lambda a, b: SymSignature([scalar(a) ** 2, 0, scalar(b) ** 2]),
                                ("a", "b"), "[a^2,0,b^2]"),
    "fig2-H": NamedGadget(fig2_H, _fig2_expected, ("x",), "H(0,1,0,1) = x"),
    "fig2-H-bundled": NamedGadget(fig2_H_bundled, lambda x: SymSignature([1, 1, scalar(x) ** 2]), ("x",), "[1,1,x^2]"),
    "fig3-H2i": NamedGadget(fig3_H2i, _h2i_expected, ("i",), "1 aligned, 2^(2i-1) crossed"),
    "fig4-chain": NamedGadget(fig4_chain, _fig4_expected, ("a", "steps"), "A^steps (1, a)"),
    "fig-1010": NamedGadget(fig_1010, None, ("f", "pin"), "[8,0,4,0] for [1,0,1,0,-1] with [1,0]"),
    "fig6-1a2b": NamedGadget(fig6_1a2b, lambda a, b: SymSignature([1, scalar(a) ** 2 * scalar(b), scalar(b) ** 2]),
                             ("a", "b"), "[1,a^2 b,b^2]"),
    "fig7-g0": NamedGadget(fig7_g0, lambda v: SymSignature([scalar(v) ** 3 + 3 * scalar(v), scalar(v) ** 2 + 1, v, 1]),
                           ("v",), "[v^3+3v,v^2+1,v,1]"),
    "fig8-g1": NamedGadget(fig8_g1, lambda v: SymSignature([scalar(v) ** 2 + 2, v, 1]), ("v",), "[v^2+2,v,1]"),
    "lemma53-fan": NamedGadget(lemma53_fan, _fan_expected, ("a", "j"), "((1+a)^j/2)(1,1) + ((1-a)^j/2)(1,-1)"),
    "binary-chain": NamedGadget(binary_chain, lambda a, j: SymSignature([1, 0, scalar(a) ** j]),
                                 ("a", "j"), "[1,0,a^j]"),
}

# published values for the fig-1010 gadget
FIG1010_TABLE = {
    ((1, 0, 1, 0, -1), (1, 0)): (8, 0, 4, 0),
    ((1, 0, 1, 0, 0), (1, 0)): (8, 0, 5, 0),
    ((-1, 0, 1, 0, 1), (0, 1)): (0, 4, 0, 8),
    ((-1, 0, 1, 0, 0), (0, 1)): (0, 1, 0, 3),
}


def _fig1010_expected(f, pin):
    key = (tuple(scalar(v) for v in f), tuple(scalar(v) for v in pin))
    for (kf, kp), val in FIG1010_TABLE.items():
        if key == (tuple(scalar(v) for v in kf), tuple(scalar(v) for v in kp)):
            return SymSignature(list(val))
    return None


REGISTRY["fig-1010"].expected = _fig1010_expected


def eval_named_gadget(name, **params):
    if name not in REGISTRY:
        raise KeyError("unknown gadget %r; known: %s" % (name, ", ".join(sorted(REGISTRY))))
    return REGISTRY[name].build(**params)


def expected_named_gadget(name, **params):
    """Closed-form value, or None where no closed form is recorded for these parameters."""
    if name not in REGISTRY:
        raise KeyError("unknown gadget %r" % name)
    return REGISTRY[name].expected(**params)


def verify_named_gadget(name, **params):
    got = eval_named_gadget(name, **params)
    want = expected_named_gadget(name, **params)
    return got, want, want is not None and got == want
