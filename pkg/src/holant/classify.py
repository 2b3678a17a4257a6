"""Dichotomy classifiers for symmetric signature sets."""

from dataclasses import dataclass, field

from .matchgate import is_realizable_under_H, is_std_realizable
from .scalar import exact_sqrt, format_scalar
from .signatures import (
    DenseSignature, SymSignature, f123_families, in_affine_sym, in_product_sym, is_degenerate,
    vanishing2_pair, vanishing3,
)

GENERAL = "TractableGeneral"
PLANAR_ONLY = "TractablePlanarOnly"
HARD = "SharpPHard"
HARD_PLANAR = "SharpPHardEvenPlanar"


class OutOfScope(ValueError):
    """Input outside the scope of the theorem being applied."""


@dataclass
class Classification:
    verdict: str
    framework: str
    witness: dict = field(default_factory=dict)

    @property
    def tractable(self):
        return self.verdict in (GENERAL, PLANAR_ONLY)

    def lines(self):
        out = ["verdict %s" % self.verdict, "framework %s" % self.framework]
        for k in sorted(self.witness):
            out.append("witness %s %s" % (k, _fmt(self.witness[k])))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(sorted(_fmt(x) for x in v)) + "}"
    if isinstance(v, (SymSignature, DenseSignature)):
        return repr(v)
    if hasattr(v, "is_zero"):
        return format_scalar(v)
    return str(v)


def _require_real(F, framework):
    for f in F:
        if not f.is_real():
            raise OutOfScope("%s is stated for real signatures; %s is complex" % (framework, f))


def _replace_degenerate(F):
    """A degenerate lam [x,y]^n behaves like n copies of the unary lam^(1/n) [x,y]."""
    out = []
    for f in F:
        d = is_degenerate(f)
        if d is not None and f.arity >= 1 and not d[0].is_zero():
            out.append(d[1])
        else:
            out.append(f)
    return out


def _all_degenerate(F):
    return all(is_degenerate(f) is not None for f in F)


def holant_star_case(F):
    """(case, witness) for the three tractable Holant* cases, or None."""
    F = list(F)
    if all(f.arity <= 2 for f in F):
        return 1, {}
    ab = vanishing2_pair(F)
    if ab is not None:
        return 2, {"a": ab[0], "b": ab[1]}
    if all(vanishing3(f) for f in F):
        return 3, {}
    return None


def classify_holant_star(F):
    F = list(F)
    if _all_degenerate(F):
        return Classification(GENERAL, "holant-star", {"reason": "all signatures degenerate"})
    # unaries are free in Holant*, so degenerate members add nothing
    core = [f for f in F if is_degenerate(f) is None]
    c = holant_star_case(core)
    if c is not None:
        w = dict(c[1])
        w["case"] = c[0]
        return Classification(GENERAL, "holant-star", w)
    return Classification(HARD_PLANAR, "holant-star", {
        "violated": "no tractable case: arity > 2 present, no common (a,b), x_k + x_(k+2) != 0"})


def classify_holant_c_real(F):
    F = list(F)
    _require_real(F, "holant-c")
    if _all_degenerate(F):
        return Classification(GENERAL, "holant-c", {"reason": "all signatures degenerate"})
    G = _replace_degenerate(F)
    c = holant_star_case([f for f in G if f.arity > 1])
    if c is not None:
        w = dict(c[1])
        w["case"] = c[0]
        w["condition"] = 1
        fams = [f123_families(f) for f in G]
        if all(fams):
            w["families"] = set().union(*fams)
        return Classification(GENERAL, "holant-c", w)
    fams = [f123_families(f) for f in G]
    if all(fams):
        return Classification(GENERAL, "holant-c", {"condition": 2, "families": set().union(*fams)})
    return Classification(HARD, "holant-c", {
        "violated": "non-unary part fails every Holant* case and some signature is outside F1 u F2 u F3"})


def classify_pl_holant_c(F):
    F = list(F)
    base = classify_holant_c_real(F)
    if base.tractable:
        base.framework = "pl-holant-c"
        return base
    ws = [is_std_realizable(f) for f in F]
    if all(ws):
        return Classification(PLANAR_ONLY, "pl-holant-c", {"matchgates": [type(w).__name__ for w in ws]})
    bad = [f for f, w in zip(F, ws) if not w]
    return Classification(HARD_PLANAR, "pl-holant-c", {"not_matchgate": bad})


def classify_csp(F):
    F = list(F)
    classes = set()
    if all(in_affine_sym(f) for f in F):
        classes.add("A")
    if all(in_product_sym(f) for f in F):
        classes.add("P")
    if classes:
        return Classification(GENERAL, "csp", {"classes": classes})
    return Classification(HARD, "csp", {
        "not_affine": [f for f in F if not in_affine_sym(f)],
        "not_product": [f for f in F if not in_product_sym(f)]})


def classify_pl_csp(F):
    F = list(F)
    _require_real(F, "pl-csp")
    base = classify_csp(F)
    if base.tractable:
        base.framework = "pl-csp"
        return base
    ws = [is_realizable_under_H(f) for f in F]
    if all(ws):
        return Classification(PLANAR_ONLY, "pl-csp", {"basis": "[[1,1],[1,-1]]", "forms": [type(w).__name__ for w in ws]})
    return Classification(HARD_PLANAR, "pl-csp", {"not_realizable_under_H": [f for f, w in zip(F, ws) if not w]})


# ----------------------------------------------------------- 2-3 regular

def _bilinear(y, p, q):
    y0, y1, y2 = y.entries
    return y0 * p[0] * q[0] + y1 * (p[0] * q[1] + p[1] * q[0]) + y2 * p[1] * q[1]


def _cube_entries(p):
    return [p[0] ** (3 - k) * p[1] ** k for k in range(4)]


def _sum3_entries(p, r):
    # S(p, r) = r p p + p r p + p p r, as a symmetric signature
    out = []
    for k in range(4):
        # weight k entry: choose which slot holds r, the rest hold p
        s = 0
        bits = [1] * k + [0] * (3 - k)
        for slot in range(3):
            t = r[bits[slot]]
            for o in range(3):
                if o != slot:
                    t = t * p[bits[o]]
            s = s + t
        out.append(s)
    return out


def _solve2(cols, target):
    """Solve target = a*cols[0] + b*cols[1] from any invertible 2x2 subsystem; verify all rows."""
    u, v = cols
    n = len(target)
    for i in range(n):
        for j in range(i + 1, n):
            det = u[i] * v[j] - u[j] * v[i]
            if det.is_zero():
                continue
            a = (target[i] * v[j] - target[j] * v[i]) / det
            b = (u[i] * target[j] - u[j] * target[i]) / det
            if all((a * u[k] + b * v[k] - target[k]).is_zero() for k in range(n)):
                return a, b
            return None
    return None


def _roots(x):
    """Directions (p0,p1) with a p0^2 + b p0 p1 + c p1^2 = 0 from the recurrence kernel."""
    x0, x1, x2, x3 = x.entries
    # kernel of [[x0,x1,x2],[x1,x2,x3]] by cross product
    a = x1 * x3 - x2 * x2
    b = x2 * x1 - x0 * x3
    c = x0 * x2 - x1 * x1
    one = x0 * 0 + 1
    zero = one * 0
    if c.is_zero():
        if b.is_zero():
            return [(zero, one)], True
        return [(zero, one), (b, -a)], False
    disc = b * b - 4 * a * c
    if disc.is_zero():
        return [(one, -b / (2 * c))], True
    r = exact_sqrt(disc) if disc.exact else None
    if r is None:
        r = disc.sqrt()
        one, b, c = one.to_approx(), b.to_approx(), c.to_approx()
    return [(one, (-b + r) / (2 * c)), (one, (-b - r) / (2 * c))], False


def classify_23regular(y, x):
    """Pl-Holant(y | x) for binary y and ternary x."""
    if y.arity != 2 or x.arity != 3:
        raise ValueError("expects a binary y and a ternary x")
    fw = "23reg"
    if is_degenerate(x) is not None:
        return Classification(GENERAL, fw, {"reason": "x degenerate"})
    if is_degenerate(y) is not None:
        return Classification(GENERAL, fw, {"category": 1, "reason": "y degenerate (y1^2 = y0 y2)"})
    roots, double = _roots(x)
    if not double:
        p, q = roots
        xe = list(x.entries)
        if not p[1].exact:
            xe = [e.to_approx() if e.exact else e for e in xe]
            y = SymSignature([e.to_approx() if e.exact else e for e in y.entries])
        sol = _solve2([_cube_entries(p), _cube_entries(q)], xe)
        if sol is None:
            raise ArithmeticError("could not decompose %s" % (x,))
        l1, l2 = sol
        w0, w1, w2 = _bilinear(y, p, p), _bilinear(y, p, q), _bilinear(y, q, q)
        wit = {"normal_form": "[1,0,0,1]", "z": (w0, w1, w2)}
        if (w1 * w1 - w0 * w2).is_zero():
            return Classification(GENERAL, fw, dict(wit, category=1))
        if not w1.is_zero() and (l1 ** 4 * w0 ** 12 - l2 ** 4 * w1 ** 12).is_zero() and (w0 * w2 + w1 * w1).is_zero():
            return Classification(GENERAL, fw, dict(wit, category=2))
        if w1.is_zero():
            return Classification(GENERAL, fw, dict(wit, category=3))
        if w0.is_zero() and w2.is_zero():
            return Classification(GENERAL, fw, dict(wit, category=4))
        if (l1 * l1 * w0 ** 3 - l2 * l2 * w2 ** 3).is_zero():
            return Classification(PLANAR_ONLY, fw, dict(wit, category=5))
        return Classification(HARD_PLANAR, fw, dict(wit, violated="none of categories 1-5"))
    p = roots[0]
    zero = p[0] * 0
    r = (zero + 1, zero) if not p[1].is_zero() else (zero, zero + 1)
    sol = _solve2([_cube_entries(p), _sum3_entries(p, r)], list(x.entries))
    if sol is None:
        raise ArithmeticError("could not decompose %s" % (x,))
    A, B = sol
    u = p
    w = (B * r[0] + (A - 1) / 3 * p[0], B * r[1] + (A - 1) / 3 * p[1])
    z0, z1, z2 = _bilinear(y, u, u), _bilinear(y, u, w), _bilinear(y, w, w)
    wit = {"normal_form": "[1,1,0,0]", "z": (z0, z1, z2)}
    if z0.is_zero():
        return Classification(GENERAL, fw, dict(wit, reason="z0 = 0"))
    s = z0 + 3 * z1
    if s.is_zero():
        return Classification(PLANAR_ONLY, fw, dict(wit, v=s))
    return Classification(HARD_PLANAR, fw, dict(wit, v_squared=s * s / (z0 * z2 - z1 * z1)))


FRAMEWORKS = {
    "holant-star": classify_holant_star,
    "holant-c": classify_holant_c_real,
    "pl-holant-c": classify_pl_holant_c,
    "csp": classify_csp,
    "pl-csp": classify_pl_csp,
}
