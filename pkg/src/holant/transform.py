"""Holographic transformations of signatures and grids."""

from collections import deque
from math import comb

from .grid import GridError, SignatureGrid
from .scalar import scalar, same_backend
from .signatures import DenseSignature, SymSignature, to_symmetric


class BasisError(ValueError):
    pass


def basis(T):
    """Normalize a 2x2 matrix (nested lists or four row-major scalars)."""
    if len(T) == 4:
        T = [T[0:2], T[2:4]]
    if len(T) != 2 or any(len(r) != 2 for r in T):
        raise BasisError("a basis is a 2x2 matrix")
    M = [[scalar(x) for x in r] for r in T]
    same_backend([x for r in M for x in r])
    return M


def basis_det(T):
    T = basis(T)
    return T[0][0] * T[1][1] - T[0][1] * T[1][0]


def basis_inverse(T):
    T = basis(T)
    d = basis_det(T)
    if d.is_zero():
        raise BasisError("basis is not invertible")
    return [[T[1][1] / d, -T[0][1] / d], [-T[1][0] / d, T[0][0] / d]]


def basis_mul(S, T):
    S, T = basis(S), basis(T)
    return [[S[i][0] * T[0][j] + S[i][1] * T[1][j] for j in range(2)] for i in range(2)]


def transpose(T):
    T = basis(T)
    return [[T[0][0], T[1][0]], [T[0][1], T[1][1]]]


def is_identity(T):
    T = basis(T)
    return T[0][0].is_one() and T[1][1].is_one() and T[0][1].is_zero() and T[1][0].is_zero()


def _sym_apply(f, T):
    n = f.arity
    out = []
    for w in range(n + 1):
        s = f.entries[0] * 0
        for j in range(w + 1):
            for k in range(n - w + 1):
                c = comb(w, j) * comb(n - w, k)
                s = s + c * T[1][1] ** j * T[1][0] ** (w - j) * T[0][1] ** k * T[0][0] ** (n - w - k) * f.entries[j + k]
        out.append(s)
    return SymSignature(out)


def _dense_apply(f, T):
    n = f.arity
    tab = list(f.table)
    for k in range(n):
        bit = 1 << (n - 1 - k)
        new = list(tab)
        for idx in range(1 << n):
            if idx & bit:
                continue
            a, b = tab[idx], tab[idx | bit]
            new[idx] = T[0][0] * a + T[0][1] * b
            new[idx | bit] = T[1][0] * a + T[1][1] * b
        tab = new
    d = DenseSignature(n, tab)
    return d


def transform_signature(f, T, variance="contravariant"):
    """Contravariant: T^{(x)n} f.  Covariant: f (T^-1)^{(x)n}, so pairs stay invariant."""
    T = basis(T)
    if basis_det(T).is_zero():
        raise BasisError("basis is not invertible")
    if variance == "covariant":
        M = transpose(basis_inverse(T))
    elif variance == "contravariant":
        M = T
    else:
        raise ValueError("variance must be contravariant or covariant")
    if isinstance(f, SymSignature):
        return _sym_apply(f, M)
    d = _dense_apply(f, M)
    return d


def symmetric_if_possible(d):
    s = to_symmetric(d) if isinstance(d, DenseSignature) else d
    return d if s is None else s


def to_bipartite(grid):
    """Insert a binary equality in the middle of every edge."""
    verts = dict(grid.vertices)
    edges = []
    rot = None if grid.rotation is None else dict(grid.rotation)
    eq2 = SymSignature([1, 0, 1])
    for i, (a, b) in enumerate(grid.edges):
        m = ("mid", i)
        while m in verts:
            m = ("mid",) + m
        verts[m] = eq2
        edges.append((a, (m, 0)))
        edges.append(((m, 1), b))
        if rot is not None:
            rot[m] = (0, 1)
    return SignatureGrid(verts, edges, grid.dangling, rot)


def two_coloring(grid):
    """Generator side of a bipartite grid: per component, the side of the first vertex."""
    adj = {v: [] for v in grid.vertices}
    for (v, _), (u, _) in grid.edges:
        adj[v].append(u)
        adj[u].append(v)
    side = {}
    for root in grid.vertices:
        if root in side:
            continue
        side[root] = 0
        q = deque([root])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    raise GridError("grid is not bipartite")
    return {v for v, s in side.items() if s == 0}


def transform_grid(grid, T, generators=None):
    """Generators transformed contravariantly, recognizers covariantly."""
    if grid.dangling:
        raise GridError("transform_grid needs a grid without dangling edges")
    gens = two_coloring(grid) if generators is None else set(generators)
    for (v, _), (u, _) in grid.edges:
        if (v in gens) == (u in gens):
            raise GridError("edge %r-%r does not join a generator to a recognizer" % (v, u))
    sigs = {}
    for v, f in grid.vertices.items():
        g = transform_signature(f, T, "contravariant" if v in gens else "covariant")
        sigs[v] = symmetric_if_possible(g) if isinstance(f, DenseSignature) else g
    return SignatureGrid(sigs, grid.edges, grid.dangling, grid.rotation)
