"""Signature grids, F-gates, the brute-force Holant oracle, and the grid file format."""

import math

from .scalar import ZERO, format_scalar, parse_scalar, scalar, same_backend
from .signatures import DenseSignature, SymSignature, dense_of, to_symmetric

DEFAULT_CAP = 30


class GridError(ValueError):
    pass


class CapExceeded(GridError):
    pass


class EmbeddingError(GridError):
    pass


class SignatureGrid:
    """Vertices labelled by signatures, edges as Boolean variables.

    vertices: dict vid -> signature; edges: list of ((v, p), (u, q));
    dangling: list of (did, (v, p)); rotation: optional dict v -> port order.
    """

    def __init__(self, vertices, edges, dangling=(), rotation=None):
        self.vertices = dict(vertices)
        self.edges = [tuple(map(tuple, e)) for e in edges]
        self.dangling = [(d, tuple(ep)) for d, ep in dangling]
        self.rotation = None if rotation is None else {v: tuple(r) for v, r in rotation.items()}
        self._check()

    def _check(self):
        used = {}
        for i, (a, b) in enumerate(self.edges):
            for ep in (a, b):
                self._port_ok(ep)
                if ep in used:
                    raise GridError("port %s.%s used twice" % ep)
                used[ep] = ("e", i)
        ids = set()
        for d, ep in self.dangling:
            if d in ids:
                raise GridError("duplicate dangling id %r" % (d,))
            ids.add(d)
            self._port_ok(ep)
            if ep in used:
                raise GridError("port %s.%s used twice" % ep)
            used[ep] = ("d", d)
        for v, f in self.vertices.items():
            for p in range(f.arity):
                if (v, p) not in used:
                    raise GridError("port %s.%d is not connected" % (v, p))
        if self.rotation is not None:
            for v, f in self.vertices.items():
                r = self.rotation.get(v, tuple(range(f.arity)))
                if sorted(r) != list(range(f.arity)):
                    raise GridError("rotation at %s is not a permutation of its ports" % (v,))
        self._used = used

    def _port_ok(self, ep):
        v, p = ep
        if v not in self.vertices:
            raise GridError("unknown vertex %r" % (v,))
        if not 0 <= p < self.vertices[v].arity:
            raise GridError("vertex %s has no port %d (arity %d)" % (v, p, self.vertices[v].arity))

    @property
    def num_edges(self):
        return len(self.edges)

    def neighbor(self, v, p):
        """Other endpoint of port (v,p): a (vertex, port) pair or ('dangling', id)."""
        kind, i = self._used[(v, p)]
        if kind == "d":
            return ("dangling", i)
        a, b = self.edges[i]
        return b if a == (v, p) else a

    def with_signatures(self, sigs):
        """Copy with some vertex signatures replaced (arity must match)."""
        verts = dict(self.vertices)
        for v, f in sigs.items():
            if f.arity != verts[v].arity:
                raise GridError("arity mismatch replacing %s" % (v,))
            verts[v] = f
        return SignatureGrid(verts, self.edges, self.dangling, self.rotation)

    def relabel(self, vmap):
        verts = {vmap.get(v, v): f for v, f in self.vertices.items()}
        edges = [((vmap.get(a[0], a[0]), a[1]), (vmap.get(b[0], b[0]), b[1])) for a, b in self.edges]
        dang = [(d, (vmap.get(ep[0], ep[0]), ep[1])) for d, ep in self.dangling]
        rot = None if self.rotation is None else {vmap.get(v, v): r for v, r in self.rotation.items()}
        return SignatureGrid(verts, edges, dang, rot)

    def rotation_of(self, v):
        if self.rotation is not None and v in self.rotation:
            return self.rotation[v]
        return tuple(range(self.vertices[v].arity))


class GridBuilder:
    """Incremental construction; ports are handed out in call order, which is also
    the default rotation order."""

    def __init__(self):
        self.vertices = {}
        self.next_port = {}
        self.edges = []
        self.dangling = []

    def add(self, vid, f):
        if vid in self.vertices:
            raise GridError("duplicate vertex %r" % (vid,))
        self.vertices[vid] = f
        self.next_port[vid] = 0
        return vid

    def _take(self, v):
        p = self.next_port[v]
        if p >= self.vertices[v].arity:
            raise GridError("vertex %r has no free port" % (v,))
        self.next_port[v] = p + 1
        return (v, p)

    def connect(self, u, v):
        self.edges.append((self._take(u), self._take(v)))

    def dangle(self, v, did=None):
        did = len(self.dangling) if did is None else did
        self.dangling.append((did, self._take(v)))
        return did

    def build(self, rotation=None):
        return SignatureGrid(self.vertices, self.edges, self.dangling, rotation)


def _compile(grid, extra_vars):
    """Variables are the edges followed by the dangling edges."""
    var_of = {}
    for i, (a, b) in enumerate(grid.edges):
        var_of[a] = i
        var_of[b] = i
    for j, (_, ep) in enumerate(grid.dangling):
        var_of[ep] = len(grid.edges) + j
    verts = []
    for v, f in grid.vertices.items():
        tab = dense_of(f).table
        ports = [var_of[(v, p)] for p in range(f.arity)]
        verts.append((tab, ports))
    return verts


def _enumerate(grid, fixed, cap):
    """Sum over all assignments of the free edge variables, dangling values fixed."""
    m = len(grid.edges)
    if m > cap:
        raise CapExceeded("%d edge variables exceed the brute-force cap %d" % (m, cap))
    verts = _compile(grid, fixed)
    vals = [0] * m + list(fixed)
    # a vertex is evaluated once its last edge variable is assigned
    ready = [[] for _ in range(m + 1)]
    for tab, ports in verts:
        last = max([p for p in ports if p < m], default=-1)
        ready[last + 1].append((tab, ports))
    zero = None
    for tab, _ in verts:
        zero = tab[0] * 0
        break
    if zero is None:
        zero = ZERO

    def local(tab, ports):
        idx = 0
        for p in ports:
            idx = (idx << 1) | vals[p]
        return tab[idx]

    def rec(k, acc):
        for tab, ports in ready[k]:
            acc = acc * local(tab, ports)
            if acc.is_zero():
                return zero
        if k == m:
            return acc
        vals[k] = 0
        s = rec(k + 1, acc)
        vals[k] = 1
        s = s + rec(k + 1, acc)
        return s

    return rec(0, zero + 1)


def brute_holant(grid, cap=DEFAULT_CAP):
    """Exact sum over all 0/1 edge assignments of the product of vertex values."""
    if grid.dangling:
        raise GridError("brute_holant needs a grid without dangling edges")
    same_backend([x for f in grid.vertices.values() for x in dense_of(f).table])
    return _enumerate(grid, [], cap)


def fgate_signature(gate, cap=DEFAULT_CAP):
    """Signature of an F-gate; external variables follow the dangling list order."""
    k = len(gate.dangling)
    table = []
    for w in range(1 << k):
        fixed = [(w >> (k - 1 - j)) & 1 for j in range(k)]
        table.append(_enumerate(gate, fixed, cap))
    return DenseSignature(k, table)


def bundle_view(sig, bundles, domain=((0, 0), (1, 1))):
    """Restrict a signature to bundles of variables taking values in `domain`.

    bundles: list of tuples of variable positions; domain[b] is the tuple of
    values a bundle carries for bundle bit b.
    """
    used = sorted(i for b in bundles for i in b)
    if used != list(range(sig.arity)):
        raise GridError("bundles must partition the variables")
    nb = len(bundles)
    table = []
    for w in range(1 << nb):
        bits = [0] * sig.arity
        for j, b in enumerate(bundles):
            vals = domain[(w >> (nb - 1 - j)) & 1]
            for pos, val in zip(b, vals):
                bits[pos] = val
        table.append(sig.value(bits))
    s = to_symmetric(DenseSignature(nb, table))
    if s is None:
        raise GridError("restricted table is not symmetric over bundles")
    return s


def faces(grid):
    """Face boundary walks of the rotation system; dangling edges end in private leaves."""
    darts = []
    nxt = {}
    for v in grid.vertices:
        rot = grid.rotation_of(v)
        for i, p in enumerate(rot):
            darts.append((v, p))
            nxt[(v, p)] = (v, rot[(i + 1) % len(rot)])
    seen = set()
    out = []
    for d in darts:
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            other = grid.neighbor(*cur)
            if other[0] == "dangling":
                # bounce off the leaf and continue around the same vertex
                cur = nxt[cur]
            else:
                cur = nxt[other]
        out.append(walk)
    return out


def _components(grid):
    parent = {v: v for v in grid.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in grid.edges:
        parent[find(a[0])] = find(b[0])
    return len({find(v) for v in grid.vertices})


def validate_embedding(grid):
    """Trace faces and check Euler's formula on every component; return the faces."""
    if grid.rotation is None:
        raise EmbeddingError("grid has no rotation system")
    fs = faces(grid)
    isolated = sum(1 for f in grid.vertices.values() if f.arity == 0)
    nv = len(grid.vertices) + len(grid.dangling)
    ne = len(grid.edges) + len(grid.dangling)
    nf = len(fs) + isolated
    if nv - ne + nf != 2 * _components(grid):
        raise EmbeddingError("not a planar embedding (V - E + F = %d)" % (nv - ne + nf))
    return fs


def rotation_from_coordinates(grid, coords):
    """Rotation system of a straight-line drawing (counterclockwise port order).

    coords maps vertex ids, and ("dangling", did) for dangling ends, to points.
    """
    rot = {}
    for v, f in grid.vertices.items():
        x0, y0 = coords[v]

        def ang(p, v=v, x0=x0, y0=y0):
            other = grid.neighbor(v, p)
            key = other if other[0] == "dangling" else other[0]
            x, y = coords[key]
            return math.atan2(y - y0, x - x0)

        rot[v] = tuple(sorted(range(f.arity), key=ang))
    return SignatureGrid(grid.vertices, grid.edges, grid.dangling, rot)


# ---------------------------------------------------------------- file format

class GridParseError(ValueError):
    def __init__(self, lineno, msg):
        super().__init__("line %d: %s" % (lineno, msg) if lineno else msg)
        self.lineno = lineno


def parse_signature_tokens(toks):
    """`sym n f0..fn` or `dense k t0..t(2^k-1)`."""
    if not toks:
        raise ValueError("empty signature literal")
    kind = toks[0]
    if kind not in ("sym", "dense"):
        raise ValueError("signature kind must be sym or dense, got %r" % kind)
    if len(toks) < 2:
        raise ValueError("missing arity")
    n = int(toks[1])
    vals = [parse_scalar(t) for t in toks[2:]]
    if kind == "sym":
        if len(vals) != n + 1:
            raise ValueError("sym %d needs %d entries, got %d" % (n, n + 1, len(vals)))
        return SymSignature(vals)
    if len(vals) != 1 << n:
        raise ValueError("dense %d needs %d entries, got %d" % (n, 1 << n, len(vals)))
    return DenseSignature(n, vals)


def format_signature(f):
    if isinstance(f, SymSignature):
        return "sym %d %s" % (f.arity, " ".join(format_scalar(x) for x in f.entries))
    return "dense %d %s" % (f.arity, " ".join(format_scalar(x) for x in f.table))


def _endpoint(tok, lineno):
    if "." not in tok:
        raise GridParseError(lineno, "endpoint %r must look like vid.port" % tok)
    v, p = tok.rsplit(".", 1)
    try:
        return (v, int(p))
    except ValueError:
        raise GridParseError(lineno, "bad port in %r" % tok)


class GridFile:
    """Raw content of a grid file; convert with to_grid / to_graph / to_matchgate."""

    def __init__(self):
        self.signatures = {}
        self.vertices = {}
        self.edges = []
        self.dangling = []
        self.rotation = {}
        self.external = []

    def to_grid(self):
        verts = {}
        for v, name in self.vertices.items():
            if name is None:
                raise GridError("vertex %s has no signature" % (v,))
            verts[v] = self.signatures[name]
        edges = [(a, b) for a, b, _ in self.edges]
        return SignatureGrid(verts, edges, self.dangling, self.rotation or None)

    def to_graph(self):
        from .fkt import WeightedPlanarGraph

        edges = [(a, b, scalar(1) if w is None else w) for a, b, w in self.edges]
        return WeightedPlanarGraph.from_ports(list(self.vertices), edges, self.rotation or None)

    def to_matchgate(self):
        from .matchgate import Matchgate

        return Matchgate(self.to_graph(), list(self.external))


def parse_grid(text):
    gf = GridFile()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kw = toks[0]
        try:
            if kw == "signature":
                if len(toks) < 3:
                    raise GridParseError(lineno, "signature needs a name and a literal")
                gf.signatures[toks[1]] = parse_signature_tokens(toks[2:])
            elif kw == "vertex":
                if len(toks) not in (2, 3):
                    raise GridParseError(lineno, "vertex takes an id and an optional signature name")
                if toks[1] in gf.vertices:
                    raise GridParseError(lineno, "duplicate vertex %s" % toks[1])
                name = toks[2] if len(toks) == 3 else None
                if name is not None and name not in gf.signatures:
                    raise GridParseError(lineno, "unknown signature %s" % name)
                gf.vertices[toks[1]] = name
            elif kw == "edge":
                if len(toks) not in (3, 4):
                    raise GridParseError(lineno, "edge takes two endpoints and an optional w=<scalar>")
                w = None
                if len(toks) == 4:
                    if not toks[3].startswith("w="):
                        raise GridParseError(lineno, "edge weight must be written w=<scalar>")
                    w = parse_scalar(toks[3][2:])
                gf.edges.append((_endpoint(toks[1], lineno), _endpoint(toks[2], lineno), w))
            elif kw == "dangling":
                if len(toks) != 3:
                    raise GridParseError(lineno, "dangling takes an id and an endpoint")
                gf.dangling.append((toks[1], _endpoint(toks[2], lineno)))
            elif kw == "rotation":
                gf.rotation[toks[1]] = tuple(int(t) for t in toks[2:])
            elif kw == "external":
                gf.external.extend(toks[1:])
            else:
                raise GridParseError(lineno, "unknown keyword %r" % kw)
        except GridParseError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise GridParseError(lineno, str(exc))
    for a, b, _ in gf.edges:
        for v, _p in (a, b):
            if v not in gf.vertices:
                raise GridParseError(0, "edge mentions undeclared vertex %s" % v)
    return gf


def dump_grid(grid, weights=None):
    """Serialize a SignatureGrid (signatures are named s0, s1, ...)."""
    names = {}
    lines = []
    for f in grid.vertices.values():
        key = format_signature(f)
        if key not in names:
            names[key] = "s%d" % len(names)
            lines.append("signature %s %s" % (names[key], key))
    for v, f in grid.vertices.items():
        lines.append("vertex %s %s" % (v, names[format_signature(f)]))
    for i, (a, b) in enumerate(grid.edges):
        w = "" if weights is None else " w=%s" % format_scalar(weights[i])
        lines.append("edge %s.%d %s.%d%s" % (a[0], a[1], b[0], b[1], w))
    for d, ep in grid.dangling:
        lines.append("dangling %s %s.%d" % (d, ep[0], ep[1]))
    if grid.rotation:
        for v, r in grid.rotation.items():
            lines.append("rotation %s %s" % (v, " ".join(str(p) for p in r)))
    return "\n".join(lines) + "\n"
