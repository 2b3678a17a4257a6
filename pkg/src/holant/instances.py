"""Instance generators shared by the tests and the demos."""

from fractions import Fraction

from .fkt import planar_triangulation
from .grid import GridBuilder, SignatureGrid, rotation_from_coordinates
from .scalar import Exact
from .signatures import DenseSignature, equality, sym
from .tractable import AffineFunction, ProductDecomposition


def rand_rational(rng, lo=-5, hi=5, den=4, nonzero=False):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if q or not nonzero:
            return Exact(q)


def lattice_instance(rows, cols, f, rng, pins=None):
    """rows x cols lattice of arity-4 vertices carrying f; boundary ports get unary pins.

    pins: list of unary signatures to draw from (default [1,0] and [0,1]).
    """
    pins = pins or [sym(1, 0), sym(0, 1)]
    b = GridBuilder()
    coords = {}
    for r in range(rows):
        for c in range(cols):
            b.add((r, c), f)
            coords[(r, c)] = (2 * c, -2 * r)
    count = [0]

    def pin(v, pos):
        u = ("u", count[0])
        count[0] += 1
        b.add(u, rng.choice(pins))
        coords[u] = pos
        b.connect(v, u)

    for r in range(rows):
        for c in range(cols):
            x, y = coords[(r, c)]
            if c + 1 < cols:
                b.connect((r, c), (r, c + 1))
            else:
                pin((r, c), (x + 1, y))
            if r == 0:
                pin((r, c), (x, y + 1))
            if c == 0:
                pin((r, c), (x - 1, y))
            if r + 1 < rows:
                b.connect((r, c), (r + 1, c))
            else:
                pin((r, c), (x, y - 1))
    return rotation_from_coordinates(b.build(), coords)


def random_planar_points(n, rng, keep=0.8):
    pts = {}
    while len(pts) < n:
        p = (rng.randint(0, 1000), rng.randint(0, 1000))
        if p not in pts.values():
            pts[len(pts)] = p
    edges = [e for e in sorted(planar_triangulation(pts)) if rng.random() < keep]
    return pts, edges


def ising_instance(coords, edges, weights):
    """#CSP instance as a bipartite grid: equality at each variable, one binary
    constraint vertex in the middle of every edge.  Returns (grid, constraint ids)."""
    deg = {v: 0 for v in coords}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    b = GridBuilder()
    pos = {}
    for v in coords:
        if deg[v]:
            b.add(v, equality(deg[v]))
            pos[v] = coords[v]
    gens = []
    for i, (u, v) in enumerate(edges):
        m = ("c", i)
        b.add(m, weights[i])
        gens.append(m)
        pos[m] = ((coords[u][0] + coords[v][0]) / 2, (coords[u][1] + coords[v][1]) / 2)
        b.connect(m, u)
        b.connect(m, v)
    return rotation_from_coordinates(b.build(), pos), gens


def random_grid(arities, make_signature, rng):
    """Random multigraph (loops allowed) pairing up all ports; arities must sum to an even number."""
    ports = [(v, p) for v, k in enumerate(arities) for p in range(k)]
    if len(ports) % 2:
        raise ValueError("odd number of ports")
    rng.shuffle(ports)
    edges = [(ports[i], ports[i + 1]) for i in range(0, len(ports), 2)]
    verts = {v: make_signature(k, rng) for v, k in enumerate(arities)}
    return SignatureGrid(verts, edges)


def random_arities(rng, max_edges=12, choices=(1, 2, 3, 4)):
    while True:
        ar = [rng.choice(choices) for _ in range(rng.randint(1, 8))]
        s = sum(ar)
        if s % 2 == 0 and 0 < s <= 2 * max_edges:
            return ar


def random_affine_signature(k, rng):
    rows = [rng.randrange(1 << (k + 1)) for _ in range(rng.randint(0, max(0, k - 1)))]
    alphas = [rng.randrange(1 << (k + 1)) for _ in range(rng.randint(0, 4))]
    f = AffineFunction(k, rows, alphas, rand_rational(rng, 1, 3, 2))
    return DenseSignature(k, f.table())


def random_product_signature(k, rng):
    vs = list(range(k))
    rng.shuffle(vs)
    eq, neq = [], []
    for a, c in zip(vs, vs[1:]):
        r = rng.random()
        if r < 0.3:
            eq.append((a, c))
        elif r < 0.5:
            neq.append((a, c))
    unary = [(j, (rand_rational(rng), rand_rational(rng))) for j in range(k) if rng.random() < 0.6]
    f = ProductDecomposition(k, rand_rational(rng, 1, 3, 2), unary, eq, neq)
    return DenseSignature(k, f.table())


def random_dense_signature(k, rng):
    return DenseSignature(k, [rand_rational(rng) for _ in range(1 << k)])
