"""Matchgates: standard signatures, realizability, synthesis and holographic solving."""

from dataclasses import dataclass
from itertools import product

from .fkt import WeightedPlanarGraph, count_weighted_pm
from .grid import EmbeddingError, GridError
from .scalar import Exact, Scalar, exact_sqrt, format_scalar, scalar
from .signatures import DenseSignature, SymSignature, kernel2, to_symmetric
from .transform import basis, basis_det, is_identity, transform_signature

H2 = [[1, 1], [1, -1]]


class SynthesisError(ValueError):
    pass


class Matchgate:
    """A weighted planar graph with an ordered list of external nodes."""

    def __init__(self, graph, external):
        self.graph = graph
        self.external = list(external)
        missing = [x for x in self.external if x not in set(graph.vertices)]
        if missing:
            raise GridError("external nodes %r are not in the graph" % (missing,))
        if len(set(self.external)) != len(self.external):
            raise GridError("external nodes must be distinct")

    @property
    def arity(self):
        return len(self.external)

    def __repr__(self):
        return "Matchgate(%d nodes, %d edges, external=%r)" % (
            len(self.graph.vertices), len(self.graph.edges), self.external)


def std_signature(gate):
    """Entry at S is the matching count after deleting the externals in S."""
    n = gate.arity
    table = []
    for bits in product((0, 1), repeat=n):
        drop = [x for x, b in zip(gate.external, bits) if b]
        table.append(count_weighted_pm(gate.graph.without(drop)))
    d = DenseSignature(n, table)
    s = to_symmetric(d)
    return d if s is None else s


def dump_matchgate(gate):
    """Grid-file text: ports are positions in each node's rotation, so no rotation lines are needed."""
    names = {}
    for x in gate.graph.vertices:
        s = x if isinstance(x, str) and x.isidentifier() else "n%d" % len(names)
        while s in names.values():
            s = "n%d" % len(names)
        names[x] = s
    port = {}
    for x, r in gate.graph.rot.items():
        for k, end in enumerate(r):
            port[end] = k
    lines = ["vertex %s" % names[x] for x in gate.graph.vertices]
    for i, (u, v, w) in enumerate(gate.graph.edges):
        lines.append("edge %s.%d %s.%d w=%s" % (names[u], port[(i, 0)], names[v], port[(i, 1)], format_scalar(w)))
    lines.append("external " + " ".join(names[x] for x in gate.external))
    return "\n".join(lines) + "\n"


def expand_weights(gate):
    """Replace each edge u-v of weight w by a path u-m1-m2-v with weights w, 1, 1.

    Every matching is preserved with the same weight, so the standard
    signature is unchanged; the middle edge of each path carries weight 1.
    """
    g = gate.graph
    verts = list(g.vertices)
    edges = []
    rot = {v: list(r) for v, r in g.rot.items()}
    remap = {}
    for i, (u, v, w) in enumerate(g.edges):
        m1, m2 = ("sub", i, 1), ("sub", i, 2)
        verts += [m1, m2]
        k = len(edges)
        edges += [(u, m1, w), (m1, m2, 1), (m2, v, 1)]
        remap[(i, 0)] = (k, 0)
        remap[(i, 1)] = (k + 2, 1)
        rot[m1] = [(k, 1), (k + 1, 0)]
        rot[m2] = [(k + 1, 1), (k + 2, 0)]
    for v in g.vertices:
        rot[v] = [remap[end] for end in g.rot[v]]
    return Matchgate(WeightedPlanarGraph(verts, edges, rot), gate.external)


# ------------------------------------------------------------------ witnesses

@dataclass(frozen=True)
class EvenStd:
    r1: Scalar
    r2: Scalar


@dataclass(frozen=True)
class OddStd:
    r1: Scalar
    r2: Scalar


@dataclass(frozen=True)
class Form1:
    lam: Scalar
    s: Scalar
    t: Scalar
    eps: int


@dataclass(frozen=True)
class Form2:
    lam: Scalar


@dataclass(frozen=True)
class Form3:
    lam: Scalar


@dataclass(frozen=True)
class No:
    reason: str = ""

    def __bool__(self):
        return False


def _parity_entries(f, parity):
    return [f.entries[i] for i in range(parity, f.arity + 1, 2)]


def _geometric_pair(vals):
    """(r1, r2), not both zero, with r1 v[j-1] = r2 v[j] for all j, else None."""
    one = vals[0] * 0 + 1 if vals else Exact(1)
    k = kernel2([(vals[j - 1], -vals[j]) for j in range(1, len(vals))])
    if k == "all":
        return (one, one)
    if k is None:
        return None
    r1, r2 = k
    if not r2.is_zero():
        return (r1 / r2, one)
    return (one, one * 0)


def is_std_realizable(f):
    """EvenStd / OddStd witness from the parity and geometric-ratio conditions, else No."""
    if isinstance(f, DenseSignature):
        s = to_symmetric(f)
        if s is None:
            return No("not symmetric")
        f = s
    for parity, kind in ((0, EvenStd), (1, OddStd)):
        other = _parity_entries(f, 1 - parity)
        if all(v.is_zero() for v in other):
            pair = _geometric_pair(_parity_entries(f, parity))
            if pair is not None:
                return kind(*pair)
            return No("entries of weight %s parity are not geometric" % ("even" if parity == 0 else "odd"))
    return No("parity condition fails")


def regenerate_std(w, n, c):
    """Entries from a standard witness with leading nonzero parity entry c."""
    parity = 0 if isinstance(w, EvenStd) else 1
    zero = c * 0
    out = [zero] * (n + 1)
    if w.r2.is_zero():
        top = n if n % 2 == parity else n - 1
        if top >= 0:
            out[top] = c
        return out
    r = w.r1 / w.r2
    for j, i in enumerate(range(parity, n + 1, 2)):
        out[i] = c * r ** j
    return out


# ------------------------------------------------- realizability under H

def form1_entries(n, lam, s, t, eps):
    u, v = s + t, s - t
    return [lam * (u ** (n - i) * v ** i + eps * v ** (n - i) * u ** i) for i in range(n + 1)]


def form2_entries(n, lam):
    return [lam * ((-1) ** i * (n - 2 * i)) for i in range(n + 1)]


def form3_entries(n, lam):
    # lambda (n - 2i): the H-preimage of the exact-one signature
    return [lam * (n - 2 * i) for i in range(n + 1)]


def _sqrt(r):
    e = exact_sqrt(r) if r.exact else None
    return e if e is not None else r.sqrt()


def is_realizable_under_H(f):
    """Fit f to Form 1, 2 or 3 (in that order), or No.

    Realizability under H is decided by testing the standard signature
    conditions on H^{(x)n} f; the form witness is then read off from that
    standard witness and re-checked against f.
    """
    n = f.arity
    g = transform_signature(f, H2)
    w = is_std_realizable(g)
    if not w:
        return No("H-transformed signature is not a standard signature")
    zero = f.entries[0] * 0
    one = zero + 1
    scale = one / 2 ** n
    if g.is_zero():
        return Form1(zero, one, zero, 1)
    parity = 0 if isinstance(w, EvenStd) else 1
    vals = _parity_entries(g, parity)
    if len(vals) == 1 or not vals[0].is_zero():
        c = vals[0]
        r = one if len(vals) == 1 else w.r1 / w.r2
        if parity == 1 and r.is_zero() and n >= 3:
            return Form3(c * scale)
        rho = _sqrt(r)
        if not rho.exact and c.exact:
            # irrational ratio root: the witness lives in the float backend
            c, one, scale = c.to_approx(), one.to_approx(), scale.to_approx()
        if parity == 0:
            return Form1(c * scale / 2, one, rho, 1)
        return Form1(c * scale / (2 * rho), one, rho, -1)
    # only the top entry of this parity survives
    c = next(v for v in reversed(vals) if not v.is_zero())
    top = max(i for i in range(parity, n + 1, 2) if not g.entries[i].is_zero())
    if top == n:
        return Form1(c * scale / 2, zero, one, (-1) ** n)
    return Form2(c * scale)


def witness_entries(w, n):
    if isinstance(w, Form1):
        return form1_entries(n, w.lam, w.s, w.t, w.eps)
    if isinstance(w, Form2):
        return form2_entries(n, w.lam)
    if isinstance(w, Form3):
        return form3_entries(n, w.lam)
    raise ValueError("no entries for %r" % (w,))


def is_realizable_under_basis_arity2(f, T):
    """Column conditions for a binary signature under basis T = [n | p]."""
    if f.arity != 2:
        raise ValueError("needs a binary signature")
    T = basis(T)
    if basis_det(T).is_zero():
        raise ValueError("basis is not invertible")
    x0, x1, x2 = f.entries
    n0, n1 = T[0][0], T[1][0]
    p0, p1 = T[0][1], T[1][1]
    c1 = x0 * p1 * p1 - 2 * x1 * p1 * n1 + x2 * n1 * n1
    c2 = x0 * p0 * p0 - 2 * x1 * p0 * n0 + x2 * n0 * n0
    mixed = x0 * p0 * p1 - x1 * (n0 * p1 + n1 * p0) + x2 * n0 * n1
    return (c1.is_zero() and c2.is_zero()) or mixed.is_zero()


# ------------------------------------------------------------------ synthesis

class _GateBuilder:
    def __init__(self):
        self.verts = []
        self.edges = []
        self.rot = {}

    def node(self, name):
        self.verts.append(name)
        self.rot[name] = []
        return name

    def edge(self, u, v, w):
        k = len(self.edges)
        self.edges.append((u, v, w))
        self.rot[u].append((k, 0))
        self.rot[v].append((k, 1))

    def build(self, external):
        return Matchgate(WeightedPlanarGraph(self.verts, self.edges, self.rot), external)


def _chain_gate(n, odd, alpha, beta, c):
    """Parity chain: cell i has nodes q, p, a and a pendant external e on a.

    A deleted external flips the parity carried along the chain, with weight
    alpha on the 0->1 flip and beta on the 1->0 flip.  The odd variant forces
    the incoming parity to 1 with an extra node on the first cell.
    """
    b = _GateBuilder()
    ext = []
    prev_p = None
    first_q = None
    for i in range(n):
        q, p, a, e = b.node(("q", i)), b.node(("p", i)), b.node(("a", i)), b.node(("e", i))
        ext.append(e)
        # rotation order is fixed below so externals run along one face
        b.edge(q, p, 1)
        b.edge(a, q, alpha)
        b.edge(a, p, beta)
        b.edge(e, a, 1)
        if prev_p is not None:
            b.edge(prev_p, q, 1)
        prev_p = p
        if first_q is None:
            first_q = q
    if odd:
        s = b.node(("s", 0))
        b.edge(s, first_q, 1)
    if not c.is_one():
        k1, k2 = b.node(("k", 0)), b.node(("k", 1))
        b.edge(k1, k2, c)
    gate = b.build(ext)
    _planar_rotation(gate)
    return gate


def _planar_rotation(gate):
    """Fix rotations of the chain so the whole gate is drawn in the plane.

    Cells sit left to right; q above-left, p above-right, a below with its
    pendant external further below.  Angles give a straight-line drawing.
    """
    g = gate.graph
    import math

    pos = {}
    for v in g.vertices:
        kind, i = v
        x = 3 * i
        pos[v] = {"q": (x, 1), "p": (x + 2, 1), "a": (x + 1, 0), "e": (x + 1, -1),
                  "s": (-2, 1), "k": (-3 + 2 * i, 3)}[kind]
    for v in g.vertices:
        x0, y0 = pos[v]

        def ang(end):
            e, s = end
            u = g.edges[e][1 - s]
            x, y = pos[u]
            return math.atan2(y - y0, x - x0)

        g.rot[v].sort(key=ang)


def _star_gate(n, c):
    b = _GateBuilder()
    hub = b.node(("h", 0))
    ext = []
    for i in range(n):
        e = b.node(("e", i))
        ext.append(e)
        b.edge(hub, e, 1)
    if not c.is_one():
        k1, k2 = b.node(("k", 0)), b.node(("k", 1))
        b.edge(k1, k2, c)
    return b.build(ext)


def _isolated_gate(n, c):
    b = _GateBuilder()
    ext = [b.node(("e", i)) for i in range(n)]
    if c.is_zero():
        b.node(("z", 0))
    elif not c.is_one():
        k1, k2 = b.node(("k", 0)), b.node(("k", 1))
        b.edge(k1, k2, c)
    return b.build(ext)


def _edge_gate(w):
    b = _GateBuilder()
    u, v = b.node(("e", 0)), b.node(("e", 1))
    b.edge(u, v, w)
    return b.build([u, v])


def synthesize_matchgate(f, T=None):
    """A matchgate whose standard signature is f (or T^{(x)n} f when a basis is given).

    The result is always verified; a template that cannot reach the target
    raises SynthesisError("unsupported shape ...").
    """
    if T is not None and not is_identity(T):
        f = transform_signature(f, T)
    if isinstance(f, DenseSignature):
        s = to_symmetric(f)
        if s is None:
            raise SynthesisError("unsupported shape: non-symmetric target")
        f = s
    w = is_std_realizable(f)
    if not w:
        raise SynthesisError("unsupported shape: %s is not a standard signature (%s)" % (f, w.reason))
    n = f.arity
    zero = f.entries[0] * 0
    one = zero + 1
    if f.is_zero():
        gate = _isolated_gate(n, zero)
    elif n == 2 and isinstance(w, EvenStd) and f.entries[2].is_one():
        gate = _edge_gate(f.entries[0])
    else:
        parity = 0 if isinstance(w, EvenStd) else 1
        vals = _parity_entries(f, parity)
        if vals[0].is_zero():
            top = max(i for i in range(n + 1) if not f.entries[i].is_zero())
            c = f.entries[top]
            if top == n:
                gate = _isolated_gate(n, c)
            elif top == n - 1:
                gate = _star_gate(n, c)
            else:
                raise SynthesisError("unsupported shape: %s" % (f,))
        else:
            c = vals[0]
            r = one if len(vals) == 1 else w.r1 / w.r2
            if parity == 0:
                gate = _chain_gate(n, False, one, r, c)
            else:
                gate = _chain_gate(n, True, r, one, c)
    got = std_signature(gate)
    if not (isinstance(got, SymSignature) and got == f):
        raise SynthesisError("unsupported shape: template produced %s instead of %s" % (got, f))
    return gate


# --------------------------------------------------------- holographic solve

def _hub_test(gate, order):
    """Planarity of the gate plus one outside hub joined to the externals in `order`."""
    g = gate.graph
    verts = list(g.vertices) + [("hub",)]
    edges = list(g.edges)
    rot = {v: list(r) for v, r in g.rot.items()}
    rot[("hub",)] = []
    for x in order:
        k = len(edges)
        edges.append((x, ("hub",), 1))
        rot[x].append((k, 0))
        rot[("hub",)].append((k, 1))
    try:
        WeightedPlanarGraph(verts, edges, rot).check_embedding()
        return True
    except EmbeddingError:
        return False


def _mirror(gate):
    g = gate.graph
    rot = {v: list(reversed(r)) for v, r in g.rot.items()}
    return Matchgate(WeightedPlanarGraph(g.vertices, g.edges, rot), gate.external)


def _place(gate, n):
    """Return (gate, externals) listed so that they follow the rotation of the
    replaced vertex; the outside hub sees them in reverse."""
    ext = list(gate.external)
    for cand in (gate, _mirror(gate)):
        if n <= 2 or _hub_test(cand, list(reversed(ext))):
            return cand, ext
    raise EmbeddingError("matchgate externals do not lie on one face in order")


def holographic_solve(grid, T=None, generators=None):
    """Holant value of a planar grid via matchgates and FKT.

    With a basis T the grid is made bipartite first (generators transformed
    contravariantly, recognizers covariantly).
    """
    from .transform import to_bipartite, transform_grid

    if grid.dangling:
        raise GridError("holographic_solve needs a grid without dangling edges")
    if T is not None and not is_identity(T):
        if generators is None:
            grid = to_bipartite(grid)
        grid = transform_grid(grid, T, generators)
    verts = []
    edges = []
    rot = {}
    port_node = {}
    for v, f in grid.vertices.items():
        if isinstance(f, DenseSignature):
            s = to_symmetric(f)
            if s is None:
                raise SynthesisError("vertex %r: only symmetric signatures are supported" % (v,))
            f = s
        try:
            gate = synthesize_matchgate(f)
        except SynthesisError as exc:
            raise SynthesisError("vertex %r: %s" % (v, exc)) from None
        gate, ext = _place(gate, f.arity)
        g = gate.graph
        base = len(edges)
        for x in g.vertices:
            verts.append((v, x))
            rot[(v, x)] = [(base + e, s) for e, s in g.rot[x]]
        for a, b, w in g.edges:
            edges.append(((v, a), (v, b), w))
        for p, x in zip(grid.rotation_of(v), ext):
            port_node[(v, p)] = (v, x)
    for a, b in grid.edges:
        x, y = port_node[a], port_node[b]
        k = len(edges)
        edges.append((x, y, 1))
        rot[x].append((k, 0))
        rot[y].append((k, 1))
    big = WeightedPlanarGraph(verts, edges, rot)
    try:
        big.check_embedding()
    except EmbeddingError:
        raise EmbeddingError("embedding breaks during splice") from None
    return count_weighted_pm(big)


def coerce_sym(vals):
    return SymSignature([scalar(v) for v in vals])
