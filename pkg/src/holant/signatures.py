"""Symmetric and dense signatures, the basic gadget algebra, and class tags."""

from dataclasses import dataclass
from math import comb

from .scalar import I, ONE, ZERO, Exact, scalar, same_backend


class ArityError(ValueError):
    pass


class SymSignature:
    """A symmetric signature [f_0, ..., f_n]; f_i is the value at Hamming weight i."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(scalar(e) for e in entries)
        if not entries:
            raise ArityError("a symmetric signature needs at least one entry")
        same_backend(entries)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("signatures are immutable")

    @property
    def arity(self):
        return len(self.entries) - 1

    @property
    def exact(self):
        return self.entries[0].exact

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, SymSignature):
            return self.entries == other.entries
        if isinstance(other, (list, tuple)):
            return len(other) == len(self.entries) and all(a == b for a, b in zip(self.entries, other))
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "[" + ",".join(str(e) for e in self.entries) + "]"

    def value(self, bits):
        return self.entries[sum(bits)]

    def table(self):
        return from_symmetric(self).table

    def is_real(self):
        return all(e.is_real() for e in self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def scale(self, c):
        return SymSignature([c * e for e in self.entries])

    def reverse(self):
        return SymSignature(self.entries[::-1])


class DenseSignature:
    """A full truth table of 2^k entries; variable 1 is the most significant bit."""

    __slots__ = ("arity", "table")

    def __init__(self, arity, table):
        table = tuple(scalar(e) for e in table)
        if len(table) != 1 << arity:
            raise ArityError("dense signature of arity %d needs %d entries, got %d" % (arity, 1 << arity, len(table)))
        same_backend(table)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("signatures are immutable")

    @property
    def exact(self):
        return self.table[0].exact

    def __eq__(self, other):
        if isinstance(other, DenseSignature):
            return self.arity == other.arity and self.table == other.table
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, self.table))

    def __repr__(self):
        return "DenseSignature(%d, [%s])" % (self.arity, ",".join(str(e) for e in self.table))

    def value(self, bits):
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        return self.table[idx]

    def __getitem__(self, bits):
        if isinstance(bits, int):
            return self.table[bits]
        return self.value(bits)

    def is_real(self):
        return all(e.is_real() for e in self.table)

    def is_zero(self):
        return all(e.is_zero() for e in self.table)


def sym(*vals):
    """Shorthand: sym(1, 0, 1) is the binary equality [1,0,1]."""
    if len(vals) == 1 and isinstance(vals[0], (list, tuple, SymSignature)):
        vals = tuple(vals[0])
    return SymSignature(vals)


def equality(k):
    """The equality signature =_k."""
    return SymSignature([1] + [0] * (k - 1) + [1]) if k > 0 else SymSignature([2])


def dense_of(f):
    """Return f as a DenseSignature whatever its kind."""
    return f if isinstance(f, DenseSignature) else from_symmetric(f)


def from_symmetric(f):
    n = f.arity
    return DenseSignature(n, [f.entries[bin(w).count("1")] for w in range(1 << n)])


def to_symmetric(d):
    """Return the SymSignature of a symmetric dense table, else None."""
    by_weight = {}
    for w, v in enumerate(d.table):
        k = bin(w).count("1")
        if k in by_weight:
            if by_weight[k] != v:
                return None
        else:
            by_weight[k] = v
    return SymSignature([by_weight[k] for k in range(d.arity + 1)])


def is_degenerate(f):
    """Return (lam, [x,y]) with f = lam [x,y]^n, or None."""
    e = f.entries
    n = f.arity
    zero = e[0] * 0
    if all(v.is_zero() for v in e):
        return (zero, SymSignature([zero + 1, zero]))
    if n == 0:
        return (e[0], SymSignature([zero + 1, zero]))
    if not e[0].is_zero():
        r = e[1] / e[0]
        p = e[0]
        for i in range(1, n + 1):
            p = p * r
            if p != e[i]:
                return None
        return (e[0], SymSignature([zero + 1, r]))
    if all(v.is_zero() for v in e[:-1]):
        return (e[-1], SymSignature([zero, zero + 1]))
    return None


def pin(f, bit, count):
    """Fix `count` inputs of f to `bit`: a prefix (bit 0) or suffix (bit 1)."""
    n = f.arity
    if count < 0 or count > n:
        raise ArityError("cannot pin %d inputs of an arity-%d signature" % (count, n))
    if bit == 0:
        return SymSignature(f.entries[: n - count + 1])
    if bit == 1:
        return SymSignature(f.entries[count:])
    raise ValueError("bit must be 0 or 1")


def join(f, g, j):
    """Connect j dangling edges of f to j of g; the result must be symmetric."""
    n, m = f.arity, g.arity
    if j < 0 or j > min(n, m):
        raise ArityError("cannot join %d edges of arities %d and %d" % (j, n, m))
    p_max, q_max = n - j, m - j
    binom = [comb(j, k) for k in range(j + 1)]

    def cell(p, q):
        s = f.entries[0] * 0
        for k in range(j + 1):
            s = s + binom[k] * f.entries[p + k] * g.entries[q + k]
        return s

    out = []
    for w in range(p_max + q_max + 1):
        vals = [cell(p, w - p) for p in range(max(0, w - q_max), min(p_max, w) + 1)]
        for v in vals[1:]:
            if v != vals[0]:
                raise ArityError("join result is not symmetric")
        out.append(vals[0])
    return SymSignature(out)


def self_join(f, pairs):
    """Connect `pairs` disjoint pairs of f's own edges."""
    n = f.arity
    if pairs < 0 or 2 * pairs > n:
        raise ArityError("cannot self-join %d pairs of an arity-%d signature" % (pairs, n))
    out = []
    for i in range(n - 2 * pairs + 1):
        s = f.entries[0] * 0
        for k in range(pairs + 1):
            s = s + comb(pairs, k) * f.entries[i + 2 * k]
        out.append(s)
    return SymSignature(out)


def canonicalize(f):
    """Scale so the first nonzero entry is 1; the zero signature is unchanged."""
    for v in f.entries:
        if not v.is_zero():
            return SymSignature([e / v for e in f.entries])
    return f


def proportional(f, g):
    """True if the entry vectors are scalar multiples (allowing zero)."""
    a, b = list(f), list(g)
    if len(a) != len(b):
        return False
    for i in range(len(a)):
        for k in range(i + 1, len(a)):
            if a[i] * b[k] != a[k] * b[i]:
                return False
    return True


@dataclass(frozen=True, eq=False)
class ClassTag:
    name: str
    params: tuple = ()

    def __eq__(self, other):
        if isinstance(other, str):
            return self.name == other
        if not isinstance(other, ClassTag):
            return NotImplemented
        return self.name == other.name and len(self.params) == len(other.params) and all(
            a == b for a, b in zip(self.params, other.params))

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        if not self.params:
            return self.name
        return "%s(%s)" % (self.name, ",".join(str(p) for p in self.params))


# the seven real shapes of F1 u F2 u F3, as (family, generator of the i-th entry)
_REAL_PATTERNS = [
    ("F1", lambda n, i: 1 if i == 0 else (1 if i == n else 0)),
    ("F1", lambda n, i: 1 if i == 0 else (-1 if i == n else 0)),
    ("F2", lambda n, i: 1 - i % 2),
    ("F2", lambda n, i: i % 2),
    ("F3", lambda n, i: 0 if i % 2 else (-1) ** (i // 2)),
    ("F3", lambda n, i: (-1) ** (i // 2) if i % 2 else 0),
    ("F3", lambda n, i: (1, 1, -1, -1)[i % 4]),
    ("F3", lambda n, i: (1, -1, -1, 1)[i % 4]),
]


def _family_vectors(name, n):
    if name == "F1":
        return [ONE if i == 0 else ZERO for i in range(n + 1)], [ONE if i == n else ZERO for i in range(n + 1)]
    if name == "F2":
        return [ONE] * (n + 1), [Exact((-1) ** i) for i in range(n + 1)]
    return [I ** i for i in range(n + 1)], [(-I) ** i for i in range(n + 1)]


def _complex_families(f):
    n = f.arity
    found = set()
    for name in ("F1", "F2", "F3"):
        u, v = _family_vectors(name, n)
        for r in range(4):
            t = [a + (I ** r) * b for a, b in zip(u, v)]
            if any(not x.is_zero() for x in t) and proportional(_cast(f, t), f.entries):
                found.add(name)
                break
    return found


def _cast(f, vals):
    if f.exact:
        return vals
    return [v.to_approx(f.entries[0].tol) for v in vals]


def f123_families(f):
    """Which of F1, F2, F3 contain f (up to a scalar)."""
    if f.is_zero():
        return {"F1", "F2", "F3"}
    n = f.arity
    if n == 0 or not f.is_real():
        return _complex_families(f)
    found = set()
    for name, gen in _REAL_PATTERNS:
        if proportional(_cast(f, [Exact(gen(n, i)) for i in range(n + 1)]), f.entries):
            found.add(name)
    return found


def _affine_unary(u):
    return bool(f123_families(u))


def in_affine_sym(f):
    """Symmetric membership in A: F1 u F2 u F3, plus tensor powers of affine unaries."""
    if f123_families(f):
        return True
    d = is_degenerate(f)
    return d is not None and (d[0].is_zero() or _affine_unary(d[1]))


def in_product_sym(f):
    """Symmetric membership in P."""
    e = f.entries
    n = f.arity
    if n <= 1 or is_degenerate(f) is not None:
        return True
    if n == 2 and e[0].is_zero() and e[2].is_zero():
        return True
    return all(v.is_zero() for v in e[1:-1])


def kernel2(rows):
    """Nonzero (a,b) with p*a + q*b = 0 for every row, 'all' if unconstrained, else None."""
    rows = [(scalar(p), scalar(q)) for p, q in rows]
    nz = [(p, q) for p, q in rows if not (p.is_zero() and q.is_zero())]
    if not nz:
        return "all"
    p, q = nz[0]
    a, b = q, -p
    for p2, q2 in nz[1:]:
        if not (p2 * a + q2 * b).is_zero():
            return None
    return _normalize_pair(a, b)


def _normalize_pair(a, b):
    lead = a if not a.is_zero() else b
    return (a / lead, b / lead)


def vanishing2_options(f):
    """Linear constraint systems on (a,b), one per alternative of the recurrence test."""
    e = f.entries
    n = f.arity
    opts = [[(e[k] - e[k + 2], e[k + 1]) for k in range(n - 1)]]
    if n == 2 and (e[0] + e[2]).is_zero():
        # [2a L, b L, -2a L]: (2a, b) proportional to (x0, x1)
        opts.append([(2 * e[1], -e[0])])
    return opts


def _pair_ok(f, ab):
    a, b = ab
    for rows in vanishing2_options(f):
        if all((p * a + q * b).is_zero() for p, q in rows):
            return True
    return False


def vanishing2_pair(fs):
    """A common nonzero (a,b) satisfying the second-order recurrence test for all fs."""
    fs = list(fs)
    if not fs:
        return (ONE, ZERO)
    z = fs[0].entries[0] * 0
    cands = [(z + 1, z), (z, z + 1)]
    for f in fs:
        for rows in vanishing2_options(f):
            k = kernel2(rows)
            if isinstance(k, tuple):
                cands.append(k)
    for ab in cands:
        if all(_pair_ok(f, ab) for f in fs):
            return ab
    return None


def vanishing3(f):
    e = f.entries
    n = f.arity
    if all((e[k] + e[k + 2]).is_zero() for k in range(n - 1)):
        return True
    return n == 2 and e[1].is_zero() and e[0] == e[2]


def in_g1(f):
    e = f.entries
    return f.arity >= 1 and not e[0].is_zero() and not e[-1].is_zero() and all(v.is_zero() for v in e[1:-1])


def in_g2(f):
    e = f.entries
    return all(e[i].is_zero() for i in range(0, len(e), 2)) or all(e[i].is_zero() for i in range(1, len(e), 2))


def in_g3(f):
    e = f.entries
    return all((e[k] + e[k + 2]).is_zero() for k in range(f.arity - 1))


def class_membership(f):
    """Every class tag whose defining condition f satisfies."""
    from .matchgate import EvenStd, OddStd, is_std_realizable

    tags = set()
    for name in sorted(f123_families(f)):
        tags.add(ClassTag(name))
    if in_g1(f):
        tags.add(ClassTag("G1"))
    if in_g2(f):
        tags.add(ClassTag("G2"))
    if in_g3(f):
        tags.add(ClassTag("G3"))
    if in_affine_sym(f):
        tags.add(ClassTag("A_sym"))
    if in_product_sym(f):
        tags.add(ClassTag("P_sym"))
    w = is_std_realizable(f)
    if isinstance(w, EvenStd):
        tags.add(ClassTag("M_std_even", (w.r1, w.r2)))
    elif isinstance(w, OddStd):
        tags.add(ClassTag("M_std_odd", (w.r1, w.r2)))
    ab = vanishing2_pair([f])
    if ab is not None:
        tags.add(ClassTag("Vanishing2", ab))
    if vanishing3(f):
        tags.add(ClassTag("Vanishing3"))
    if f.arity <= 2:
        tags.add(ClassTag("Arity_le_2"))
    d = is_degenerate(f)
    if d is not None:
        tags.add(ClassTag("Degenerate", (d[0], d[1])))
    return tags


def tag_names(tags):
    return {t.name for t in tags}
