"""Polynomial-time evaluators for affine, product-type and arity-2 instances."""

from dataclasses import dataclass, field

from .grid import GridError
from .scalar import I, Exact, scalar
from .signatures import DenseSignature, dense_of

MAX_SEARCH_ARITY = 8


class TractableError(ValueError):
    pass


class UndecidedArity(TractableError):
    pass


def _bits(idx, k):
    return [(idx >> (k - 1 - j)) & 1 for j in range(k)]


def _parity(x):
    return bin(x).count("1") & 1


# ------------------------------------------------------------------ affine

@dataclass
class AffineFunction:
    """lam * [A X = 0] * i^{sum_j <alpha_j, X>} with X = (x_1..x_k, 1).

    Rows of A and the alphas are bitmasks over X; bit k-1-j is x_{j+1} and
    bit k is the constant coordinate.
    """

    arity: int
    A: list
    alphas: list
    lam: object

    def _x(self, bits):
        m = 1 << self.arity
        for j, b in enumerate(bits):
            if b:
                m |= 1 << (self.arity - 1 - j)
        return m

    def value(self, bits):
        X = self._x(bits)
        zero = self.lam * 0
        if any(_parity(row & X) for row in self.A):
            return zero
        e = sum(_parity(a & X) for a in self.alphas) % 4
        return self.lam * I ** e if self.lam.exact else self.lam * (1j ** e)

    def table(self):
        return [self.value(_bits(w, self.arity)) for w in range(1 << self.arity)]


def _nullspace_rows(vectors, width):
    """Basis of {a : parity(a & v) = 0 for all v} in F_2^width."""
    pivots = {}
    for v in vectors:
        for p in sorted(pivots, reverse=True):
            if v >> p & 1:
                v ^= pivots[p]
        if v:
            p = v.bit_length() - 1
            for q in list(pivots):
                if pivots[q] >> p & 1:
                    pivots[q] ^= v
            pivots[p] = v
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for c in free:
        a = 1 << c
        for p, row in pivots.items():
            if row >> c & 1:
                a |= 1 << p
        basis.append(a)
    return basis


def _phase(ratio):
    """Exponent e in Z_4 with ratio = i^e, else None."""
    for e in range(4):
        target = I ** e if ratio.exact else scalar(1j ** e)
        if ratio == target:
            return e
    return None


def is_affine(f):
    """AffineFunction witness for f, or None."""
    d = dense_of(f)
    k = d.arity
    if k > MAX_SEARCH_ARITY:
        raise UndecidedArity("affine membership undecided at arity %d (search bound %d)" % (k, MAX_SEARCH_ARITY))
    zero = d.table[0] * 0
    support = [w for w in range(1 << k) if not d.table[w].is_zero()]
    if not support:
        return AffineFunction(k, [], [], zero)
    size = len(support)
    if size & (size - 1):
        return None
    sset = set(support)
    base = support[0]
    shifted = [w ^ base for w in support]
    # a coset of a linear space: closed under xor after shifting
    span = {0}
    gens = []
    for s in shifted:
        if s not in span:
            gens.append(s)
            span |= {x ^ s for x in span}
    if len(span) != size or any((x ^ base) not in sset for x in span):
        return None
    # rows of A over X = (x, 1): orthogonal to every (w, 1) with w in support
    X_vecs = [(1 << k) | w for w in support]
    A = _nullspace_rows(X_vecs, k + 1)
    # free coordinates: pick coordinates independent on the linear part
    free = []
    basis_rows = {}
    for g in gens:
        v = g
        for p in sorted(basis_rows, reverse=True):
            if v >> p & 1:
                v ^= basis_rows[p]
        p = v.bit_length() - 1
        basis_rows[p] = v
    # reduce so that each generator is identified by one pivot coordinate
    for p in sorted(basis_rows):
        for q in basis_rows:
            if q != p and basis_rows[q] >> p & 1:
                basis_rows[q] ^= basis_rows[p]
    free = sorted(basis_rows)
    origin = base
    for p in free:
        if origin >> p & 1:
            origin ^= basis_rows[p]
    lam = d.table[origin]

    def point(ts):
        w = origin
        for p, t in zip(free, ts):
            if t:
                w ^= basis_rows[p]
        return w

    m = len(free)
    c = []
    for a in range(m):
        e = _phase(d.table[point([int(b == a) for b in range(m)])] / lam)
        if e is None:
            return None
        c.append(e)
    dq = {}
    for a in range(m):
        for b in range(a + 1, m):
            e = _phase(d.table[point([int(x in (a, b)) for x in range(m)])] / lam)
            if e is None or (e - c[a] - c[b]) % 2:
                return None
            dq[(a, b)] = ((e - c[a] - c[b]) % 4) // 2
    # coordinates in the X bitmask for free position p (x bit index p)
    alphas = []
    for a in range(m):
        alphas += [1 << free[a]] * c[a]
    for (a, b), v in dq.items():
        if v:
            pa, pb = 1 << free[a], 1 << free[b]
            alphas += [pa | pb] + [pa] * 3 + [pb] * 3
    w = AffineFunction(k, A, alphas, lam)
    tab = w.table()
    if any(x != y for x, y in zip(tab, d.table)):
        return None
    return w


# ------------------------------------------------------------- product type

@dataclass
class ProductDecomposition:
    """scale * product of unary(var, (a, b)), eq(i, j) and neq(i, j) factors."""

    arity: int
    scale: object
    unary: list = field(default_factory=list)
    eq: list = field(default_factory=list)
    neq: list = field(default_factory=list)

    def value(self, bits):
        v = self.scale
        for i, j in self.eq:
            if bits[i] != bits[j]:
                return v * 0
        for i, j in self.neq:
            if bits[i] == bits[j]:
                return v * 0
        for i, (a, b) in self.unary:
            v = v * (b if bits[i] else a)
        return v

    def table(self):
        return [self.value(_bits(w, self.arity)) for w in range(1 << self.arity)]


def is_product_type(f):
    """ProductDecomposition witness for f, or None."""
    d = dense_of(f)
    k = d.arity
    if k > MAX_SEARCH_ARITY:
        raise UndecidedArity("product membership undecided at arity %d (search bound %d)" % (k, MAX_SEARCH_ARITY))
    zero = d.table[0] * 0
    one = zero + 1
    support = [_bits(w, k) for w in range(1 << k) if not d.table[w].is_zero()]
    if not support:
        if k == 0:
            return ProductDecomposition(0, zero)
        return ProductDecomposition(k, zero, [(0, (zero, zero))])
    out = ProductDecomposition(k, one)
    pinned = {}
    for j in range(k):
        vals = {s[j] for s in support}
        if len(vals) == 1:
            pinned[j] = vals.pop()
            out.unary.append((j, (zero, one) if pinned[j] else (one, zero)))
    rep = {}
    reps = []
    for j in range(k):
        if j in pinned:
            continue
        for r in reps:
            if all(s[j] == s[r] for s in support):
                rep[j] = r
                out.eq.append((r, j))
                break
            if all(s[j] != s[r] for s in support):
                rep[j] = r
                out.neq.append((r, j))
                break
        else:
            reps.append(j)
    if len(support) != 1 << len(reps):
        return None
    base = [0] * k
    for j, b in pinned.items():
        base[j] = b
    for j, r in rep.items():
        base[j] = 0 if (r, j) in out.eq else 1

    def with_reps(bits, on):
        b = list(bits)
        for r in on:
            b[r] ^= 1
        for j, r in rep.items():
            if r in on:
                b[j] ^= 1
        return b

    fb = d.value(base)
    out.scale = fb
    for r in reps:
        out.unary.append((r, (one, d.value(with_reps(base, [r])) / fb)))
    tab = out.table()
    if any(x != y for x, y in zip(tab, d.table)):
        return None
    return out


# ----------------------------------------------------------- grid evaluators

def _edge_index(grid):
    if grid.dangling:
        raise GridError("evaluators need a grid without dangling edges")
    var = {}
    for i, (a, b) in enumerate(grid.edges):
        var[a] = i
        var[b] = i
    return var


def _witnesses(grid, test, what, witnesses):
    out = {}
    for v, f in grid.vertices.items():
        w = None if witnesses is None else witnesses.get(v)
        if w is None:
            w = test(f)
        if w is None:
            raise TractableError("signature at vertex %r is not %s" % (v, what))
        out[v] = w
    return out


class _Z4Form:
    """Exponent c0 + sum c_k t_k + 2 sum_{k<l} d_kl t_k t_l over Z_4."""

    def __init__(self):
        self.c0 = 0
        self.c = {}
        self.d = set()

    def add_lin(self, k, v):
        self.c[k] = (self.c.get(k, 0) + v) % 4

    def add_quad(self, k, l):
        if k == l:
            self.add_lin(k, 2)
            return
        key = (min(k, l), max(k, l))
        self.d ^= {key}

    def add_xor(self, terms, const, mult):
        """mult * (const xor t_a xor t_b ...) via x xor y = x + y - 2xy (mod 4)."""
        terms = list(terms) + (["1"] if const else [])
        for t in terms:
            if t == "1":
                self.c0 = (self.c0 + mult) % 4
            else:
                self.add_lin(t, mult)
        if mult % 2:
            for a in range(len(terms)):
                for b in range(a + 1, len(terms)):
                    x, y = terms[a], terms[b]
                    if x == "1":
                        self.add_lin(y, 2)
                    elif y == "1":
                        self.add_lin(x, 2)
                    else:
                        self.add_quad(x, y)

    def partners(self, k):
        return sorted(l for a, b in self.d for l in ((b,) if a == k else (a,) if b == k else ()))


def _gauss_sum(form, nvars):
    """sum over t in F_2^nvars of i^{form(t)}, as (exact Gaussian integer)."""
    factor = Exact(1)
    alive = set(range(nvars))
    while alive:
        k = min(alive)
        ck = form.c.get(k, 0)
        part = form.partners(k)
        form.d = {e for e in form.d if k not in e}
        form.c.pop(k, None)
        alive.discard(k)
        if ck % 2 == 0:
            e = ck // 2
            factor = factor * 2
            if not part:
                if e:
                    return Exact(0)
                continue
            # constraint: xor of partners = e; solve for the last partner
            m = part[-1]
            rest = part[:-1]
            cm = form.c.pop(m, 0)
            mp = [l for l in form.partners(m)]
            form.d = {x for x in form.d if m not in x}
            alive.discard(m)
            form.add_xor(rest, e, cm)
            for l in mp:
                # 2 t_m t_l with t_m = e xor rest: 2 (e + sum rest) t_l mod 4
                if e:
                    form.add_lin(l, 2)
                for r in rest:
                    form.add_quad(r, l)
        else:
            factor = factor * (1 + I ** ck)
            form.add_xor(part, 0, (-ck) % 4)
    return factor * I ** form.c0


def eval_affine(grid, witnesses=None):
    """Holant value when every signature is affine, by Gauss-sum elimination."""
    var = _edge_index(grid)
    wit = _witnesses(grid, is_affine, "affine", witnesses)
    m = len(grid.edges)
    lam = None
    rows = []
    alphas = []
    for v, f in grid.vertices.items():
        w = wit[v]
        lam = w.lam if lam is None else lam * w.lam
        k = f.arity
        cols = [var[(v, p)] for p in range(k)]

        def lift(mask):
            out = 1 << m if mask >> k & 1 else 0
            for j in range(k):
                if mask >> (k - 1 - j) & 1:
                    out ^= 1 << cols[j]
            return out

        rows += [lift(r) for r in w.A]
        alphas += [lift(a) for a in w.alphas]
    if lam is None:
        return Exact(1)
    if lam.is_zero():
        return lam
    # solve rows . (x, 1) = 0 ; x = x0 + sum t_j g_j
    pivots = {}
    for r in rows:
        for p in sorted(pivots, reverse=True):
            if r >> p & 1:
                r ^= pivots[p]
        lowmask = r & ((1 << m) - 1)
        if not lowmask:
            if r:
                return lam * 0
            continue
        p = lowmask.bit_length() - 1
        for q in list(pivots):
            if pivots[q] >> p & 1:
                pivots[q] ^= r
        pivots[p] = r
    free = [j for j in range(m) if j not in pivots]
    tindex = {j: n for n, j in enumerate(free)}

    def express(j):
        """x_j as (const, [t indices])."""
        if j in tindex:
            return 0, [tindex[j]]
        row = pivots[j]
        const = row >> m & 1
        ts = [tindex[c] for c in free if row >> c & 1]
        return const, ts

    form = _Z4Form()
    for a in alphas:
        const = a >> m & 1
        acc = {}
        for j in range(m):
            if a >> j & 1:
                cj, ts = express(j)
                const ^= cj
                for t in ts:
                    acc[t] = acc.get(t, 0) ^ 1
        form.add_xor([t for t, b in sorted(acc.items()) if b], const, 1)
    s = _gauss_sum(form, len(free))
    if not lam.exact:
        s = s.to_approx(lam.tol)
    return lam * s


def eval_product(grid, witnesses=None):
    """Holant value when every signature is product type: union-find with parity."""
    var = _edge_index(grid)
    wit = _witnesses(grid, is_product_type, "product type", witnesses)
    m = len(grid.edges)
    parent = list(range(m))
    par = [0] * m

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= par[x]
            x = parent[x]
        return x, p

    scale = None
    unary = []
    for v, f in grid.vertices.items():
        w = wit[v]
        scale = w.scale if scale is None else scale * w.scale
        cols = [var[(v, p)] for p in range(f.arity)]
        for rel, pairs in ((0, w.eq), (1, w.neq)):
            for i, j in pairs:
                (ra, pa), (rb, pb) = find(cols[i]), find(cols[j])
                if ra == rb:
                    if pa ^ pb != rel:
                        return scale * 0
                else:
                    parent[ra] = rb
                    par[ra] = pa ^ pb ^ rel
        for i, ab in w.unary:
            unary.append((cols[i], ab))
    if scale is None:
        return Exact(1)
    one = scale * 0 + 1
    acc = {}
    for x in range(m):
        r, _ = find(x)
        acc.setdefault(r, [one, one])
    for x, (a, b) in unary:
        r, p = find(x)
        # x = root xor p
        acc[r][0] = acc[r][0] * (b if p else a)
        acc[r][1] = acc[r][1] * (a if p else b)
    out = scale
    for r in acc:
        out = out * (acc[r][0] + acc[r][1])
    return out


def eval_arity_le2(grid):
    """Holant value of a grid of unary and binary signatures: paths and cycles."""
    if grid.dangling:
        raise GridError("evaluators need a grid without dangling edges")
    for v, f in grid.vertices.items():
        if f.arity > 2:
            raise TractableError("vertex %r has arity %d > 2" % (v, f.arity))
    dense = {v: dense_of(f) for v, f in grid.vertices.items()}
    seen = set()
    total = None

    def mat(v, pin):
        d = dense[v]
        if pin == 0:
            return [[d.value([a, b]) for b in (0, 1)] for a in (0, 1)]
        return [[d.value([b, a]) for b in (0, 1)] for a in (0, 1)]

    def walk(v, pin, vecs):
        """Carry row vectors through binary vertices until a unary or a seen vertex."""
        while True:
            seen.add(v)
            d = dense[v]
            if d.arity == 1:
                return [x[0] * d.table[0] + x[1] * d.table[1] for x in vecs]
            M = mat(v, pin)
            vecs = [[x[0] * M[0][b] + x[1] * M[1][b] for b in (0, 1)] for x in vecs]
            v, pin = grid.neighbor(v, 1 - pin)
            if v in seen:
                return vecs

    order = list(grid.vertices)
    for v in order:
        d = dense[v]
        if v in seen or d.arity == 2:
            continue
        seen.add(v)
        if d.arity == 0:
            val = d.table[0]
        else:
            u, q = grid.neighbor(v, 0)
            val = walk(u, q, [list(d.table)])[0]
        total = val if total is None else total * val
    for v in order:
        if v in seen:
            continue
        # a cycle of binary signatures: trace of the matrix product
        one = dense[v].table[0] * 0 + 1
        rows = walk(v, 0, [[one, one * 0], [one * 0, one]])
        val = rows[0][0] + rows[1][1]
        total = val if total is None else total * val
    if total is None:
        return Exact(1)
    return total


def as_dense(f):
    return f if isinstance(f, DenseSignature) else dense_of(f)
