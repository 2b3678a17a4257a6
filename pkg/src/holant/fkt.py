"""FKT: Kasteleyn orientations, exact Pfaffians, and weighted perfect matchings."""

import math
from collections import deque
from dataclasses import dataclass

from .grid import EmbeddingError
from .scalar import Approx, Exact, scalar, same_backend


class WeightedPlanarGraph:
    """Weighted graph with a rotation system.

    edges: list of (u, v, w).  rot: dict vertex -> cyclic list of edge ends
    (edge index, side), side 0 being the edge's first endpoint.
    """

    def __init__(self, vertices, edges, rot=None):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        vs = set(self.vertices)
        self.edges = []
        for u, v, w in edges:
            if u not in vs or v not in vs:
                raise ValueError("edge (%r, %r) has an unknown endpoint" % (u, v))
            self.edges.append((u, v, scalar(w)))
        same_backend([w for _, _, w in self.edges])
        if rot is None:
            rot = {v: [] for v in self.vertices}
            for i, (u, v, _) in enumerate(self.edges):
                rot[u].append((i, 0))
                rot[v].append((i, 1))
        self.rot = {v: list(rot.get(v, [])) for v in self.vertices}
        ends = sorted(x for r in self.rot.values() for x in r)
        if ends != sorted([(i, 0) for i in range(len(self.edges))] + [(i, 1) for i in range(len(self.edges))]):
            raise EmbeddingError("rotation system does not list every edge end exactly once")
        for v, r in self.rot.items():
            for e, s in r:
                if self.edges[e][s] != v:
                    raise EmbeddingError("rotation at %r lists an edge end of another vertex" % (v,))

    @classmethod
    def from_ports(cls, vertices, edges, rotation=None):
        """edges: ((v,p), (u,q), w); rotation: dict v -> port order (default sorted)."""
        plain = []
        port_end = {}
        for i, (a, b, w) in enumerate(edges):
            plain.append((a[0], b[0], w))
            for ep, side in ((a, 0), (b, 1)):
                if ep in port_end:
                    raise EmbeddingError("port %s.%s used twice" % ep)
                port_end[ep] = (i, side)
        rot = {}
        for v in vertices:
            ports = sorted(p for (x, p) in port_end if x == v)
            order = ports
            if rotation and v in rotation:
                order = list(rotation[v])
                if sorted(order) != ports:
                    raise EmbeddingError("rotation at %s does not match its ports" % (v,))
            rot[v] = [port_end[(v, p)] for p in order]
        return cls(vertices, plain, rot)

    @classmethod
    def from_coordinates(cls, coords, edges):
        """Rotation from a straight-line drawing: ends sorted counterclockwise by angle."""
        g = cls(list(coords), edges)
        for v in g.vertices:
            x0, y0 = coords[v]

            def ang(end):
                e, s = end
                u = g.edges[e][1 - s]
                x, y = coords[u]
                return math.atan2(y - y0, x - x0)

            g.rot[v].sort(key=ang)
        return g

    def weight_exact(self):
        return all(w.exact for _, _, w in self.edges) if self.edges else True

    def without(self, drop):
        """Delete vertices (and incident edges); the induced rotation stays planar."""
        drop = set(drop)
        keep = [v for v in self.vertices if v not in drop]
        new_index = {}
        edges = []
        for i, (u, v, w) in enumerate(self.edges):
            if u in drop or v in drop:
                continue
            new_index[i] = len(edges)
            edges.append((u, v, w))
        rot = {v: [(new_index[e], s) for e, s in self.rot[v] if e in new_index] for v in keep}
        return WeightedPlanarGraph(keep, edges, rot)

    def head(self, dart):
        e, s = dart
        return self.edges[e][1 - s]

    def faces(self):
        """Face walks as lists of darts (edge, side); a dart runs from edges[e][side]."""
        succ = {}
        for v, r in self.rot.items():
            for i, end in enumerate(r):
                succ[end] = r[(i + 1) % len(r)]
        seen = set()
        out = []
        for v in self.vertices:
            for d in self.rot[v]:
                if d in seen:
                    continue
                walk = []
                cur = d
                while cur not in seen:
                    seen.add(cur)
                    walk.append(cur)
                    e, s = cur
                    cur = succ[(e, 1 - s)]
                out.append(walk)
        return out

    def components(self):
        adj = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = [v]
            seen.add(v)
            q = deque([v])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        q.append(y)
            comps.append(comp)
        return comps

    def sub(self, keep):
        keep_set = set(keep)
        return self.without([v for v in self.vertices if v not in keep_set])

    def check_embedding(self):
        fs = self.faces()
        isolated = sum(1 for v in self.vertices if not self.rot[v])
        euler = len(self.vertices) - len(self.edges) + len(fs) + isolated
        if euler != 2 * len(self.components()):
            raise EmbeddingError("not a planar embedding (V - E + F = %d)" % euler)
        return fs


@dataclass
class Orientation:
    forward: list  # forward[e] True means the edge points from edges[e][0] to edges[e][1]
    faces: list
    outer: set  # one excluded face index per connected component


def _drop_loops(g):
    if all(u != v for u, v, _ in g.edges):
        return g
    keep = [i for i, (u, v, _) in enumerate(g.edges) if u != v]
    idx = {e: k for k, e in enumerate(keep)}
    rot = {v: [(idx[e], s) for e, s in r if e in idx] for v, r in g.rot.items()}
    return WeightedPlanarGraph(g.vertices, [g.edges[i] for i in keep], rot)


def kasteleyn_orient(g):
    """Orientation in which every face but one per component has an odd number of
    edges pointing along the face walk."""
    g = _drop_loops(g)
    fs = g.check_embedding()
    m = len(g.edges)
    face_of = {}
    for fi, walk in enumerate(fs):
        for d in walk:
            face_of[d] = fi
    forward = [None] * m
    outer = set()
    adj = {v: [] for v in g.vertices}
    for i, (u, v, _) in enumerate(g.edges):
        adj[u].append((i, v))
        adj[v].append((i, u))
    tree = set()
    seen = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        q = deque([root])
        while q:
            x = q.popleft()
            for e, y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    tree.add(e)
                    forward[e] = True
                    q.append(y)
    # dual tree over non-tree edges, one per component, rooted at its first face
    dual = {fi: [] for fi in range(len(fs))}
    for e in range(m):
        if e in tree:
            continue
        a, b = face_of[(e, 0)], face_of[(e, 1)]
        dual[a].append((e, b))
        dual[b].append((e, a))
    done = set()
    for r in range(len(fs)):
        if r in done:
            continue
        outer.add(r)
        order = []
        parent = {r: None}
        stack = [r]
        done.add(r)
        while stack:
            f = stack.pop()
            order.append(f)
            for e, h in dual[f]:
                if h not in done:
                    done.add(h)
                    parent[h] = e
                    stack.append(h)
        for f in reversed(order):
            e = parent[f]
            if e is None:
                continue
            along = 0
            mine = None
            for d in fs[f]:
                de, ds = d
                if de == e:
                    mine = ds
                    continue
                if forward[de] is None:
                    raise EmbeddingError("dual structure is not a tree")
                if forward[de] == (ds == 0):
                    along += 1
            # make the count odd by choosing the direction of e
            forward[e] = (mine == 0) if along % 2 == 0 else (mine != 0)
    return Orientation(forward, fs, outer)


def kasteleyn_defects(g, orient):
    """Faces (outside the excluded ones) whose along-count is even."""
    g = _drop_loops(g)
    bad = []
    for fi, walk in enumerate(orient.faces):
        if fi in orient.outer:
            continue
        along = sum(1 for e, s in walk if orient.forward[e] == (s == 0))
        if along % 2 == 0:
            bad.append(fi)
    return bad


def _is_skew(M):
    n = len(M)
    for i in range(n):
        if len(M[i]) != n:
            return False
        if not scalar(M[i][i]).is_zero():
            return False
        for j in range(i + 1, n):
            if scalar(M[i][j]) != -scalar(M[j][i]):
                return False
    return True


def pfaffian(M):
    """Pfaffian of a skew-symmetric matrix by skew Schur-complement elimination."""
    n = len(M)
    A = [[scalar(x) for x in row] for row in M]
    if not _is_skew(A):
        raise ValueError("matrix is not skew-symmetric")
    if n == 0:
        return Exact(1)
    exact = same_backend([x for row in A for x in row])
    one = A[0][0] * 0 + 1
    if n % 2:
        return one * 0
    pf = one
    for k in range(0, n - 1, 2):
        if exact:
            j = next((j for j in range(k + 1, n) if not A[k][j].is_zero()), None)
        else:
            j = max(range(k + 1, n), key=lambda c: abs(complex(A[k][c])))
            if A[k][j].z == 0:
                j = None
        if j is None:
            return one * 0
        if j != k + 1:
            A[k + 1], A[j] = A[j], A[k + 1]
            for row in A:
                row[k + 1], row[j] = row[j], row[k + 1]
            pf = -pf
        p = A[k][k + 1]
        pf = pf * p
        rk, rk1 = A[k], A[k + 1]
        for i in range(k + 2, n):
            ai, bi = rk[i], rk1[i]
            if ai.is_zero() and bi.is_zero():
                continue
            row = A[i]
            for jj in range(i + 1, n):
                delta = (bi * rk[jj] - ai * rk1[jj]) / p
                if not delta.is_zero():
                    row[jj] = row[jj] + delta
                    A[jj][i] = -row[jj]
    return pf


def det(M):
    """Determinant by exact (or partially pivoted) Gaussian elimination."""
    n = len(M)
    A = [[scalar(x) for x in row] for row in M]
    if n == 0:
        return Exact(1)
    exact = same_backend([x for row in A for x in row])
    d = A[0][0] * 0 + 1
    for c in range(n):
        if exact:
            p = next((r for r in range(c, n) if not A[r][c].is_zero()), None)
        else:
            p = max(range(c, n), key=lambda r: abs(complex(A[r][c])))
            if A[p][c].z == 0:
                p = None
        if p is None:
            return d * 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        piv = A[c][c]
        d = d * piv
        for r in range(c + 1, n):
            if A[r][c].is_zero():
                continue
            f = A[r][c] / piv
            for k in range(c, n):
                A[r][k] = A[r][k] - f * A[c][k]
    return d


def skew_matrix(g, orient, unit=False):
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    zero = Exact(0) if unit or g.weight_exact() else Approx(0)
    A = [[zero] * n for _ in range(n)]
    for e, (u, v, w) in enumerate(g.edges):
        if u == v:
            continue
        w = Exact(1) if unit else w
        a, b = (index[u], index[v]) if orient.forward[e] else (index[v], index[u])
        A[a][b] = A[a][b] + w
        A[b][a] = A[b][a] - w
    return A


def _nonneg_real(w):
    return w.exact and w.is_real() and w.real >= 0


def count_weighted_pm(g, sign="auto"):
    """Sum over perfect matchings of the product of edge weights, via FKT."""
    g = _drop_loops(g)
    g.check_embedding()
    total = None
    for comp in g.components():
        h = g.sub(comp)
        if len(comp) % 2:
            val = (Exact(0) if h.weight_exact() else Approx(0))
        elif len(comp) == 0:
            continue
        else:
            orient = kasteleyn_orient(h)
            pf = pfaffian(skew_matrix(h, orient))
            if sign == "auto" and all(_nonneg_real(w) for _, _, w in h.edges):
                val = pf if pf.real >= 0 else -pf
            else:
                ref = pfaffian(skew_matrix(h, orient, unit=True))
                if ref.is_zero():
                    val = pf * 0
                else:
                    val = pf if ref.real > 0 else -pf
        total = val if total is None else total * val
    if total is None:
        return Exact(1) if g.weight_exact() else Approx(1)
    return total


def brute_pm(g):
    """Reference enumeration of weighted perfect matchings."""
    adj = {v: [] for v in g.vertices}
    for u, v, w in g.edges:
        if u != v:
            adj[u].append((v, w))
            adj[v].append((u, w))
    one = Exact(1) if g.weight_exact() else Approx(1)
    order = list(g.vertices)

    def rec(free):
        if not free:
            return one
        v = next(x for x in order if x in free)
        rest = free - {v}
        s = one * 0
        for u, w in adj[v]:
            if u in rest:
                s = s + w * rec(rest - {u})
        return s

    return rec(frozenset(g.vertices))


# ----------------------------------------------------------- graph generators

def grid_graph(rows, cols, weight=lambda u, v: 1):
    coords = {(r, c): (c, -r) for r in range(rows) for c in range(cols)}
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append(((r, c), (r, c + 1), weight((r, c), (r, c + 1))))
            if r + 1 < rows:
                edges.append(((r, c), (r + 1, c), weight((r, c), (r + 1, c))))
    return WeightedPlanarGraph.from_coordinates(coords, edges)


def cycle_graph(n, weight=lambda u, v: 1):
    coords = {i: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)}
    edges = [(i, (i + 1) % n, weight(i, (i + 1) % n)) for i in range(n)]
    return WeightedPlanarGraph.from_coordinates(coords, edges)


def wheel_graph(spokes, weight=lambda u, v: 1):
    coords = {i: (math.cos(2 * math.pi * i / spokes), math.sin(2 * math.pi * i / spokes)) for i in range(spokes)}
    coords["hub"] = (0.0, 0.0)
    edges = [(i, (i + 1) % spokes, weight(i, (i + 1) % spokes)) for i in range(spokes)]
    edges += [("hub", i, weight("hub", i)) for i in range(spokes)]
    return WeightedPlanarGraph.from_coordinates(coords, edges)


def random_planar_graph(n, rng, keep=0.8, weight=None):
    """Random subgraph of a Delaunay-style triangulation built by point insertion."""
    pts = {}
    while len(pts) < n:
        p = (rng.randint(0, 10 ** 6), rng.randint(0, 10 ** 6))
        if p not in pts.values():
            pts[len(pts)] = p
    tri_edges = planar_triangulation(pts)
    edges = []
    for u, v in sorted(tri_edges):
        if rng.random() < keep:
            w = 1 if weight is None else weight(rng)
            edges.append((u, v, w))
    return WeightedPlanarGraph.from_coordinates(pts, edges)


def planar_triangulation(pts):
    """Greedy planar triangulation: add shortest non-crossing segments."""
    ids = list(pts)
    cand = sorted(((pts[a][0] - pts[b][0]) ** 2 + (pts[a][1] - pts[b][1]) ** 2, a, b)
                  for i, a in enumerate(ids) for b in ids[i + 1:])
    chosen = []

    def cross(p1, p2, p3, p4):
        def o(a, b, c):
            return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

        d1, d2, d3, d4 = o(p3, p4, p1), o(p3, p4, p2), o(p1, p2, p3), o(p1, p2, p4)
        return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0) and d1 * d2 * d3 * d4 != 0

    for _, a, b in cand:
        ok = True
        for c, d in chosen:
            if len({a, b, c, d}) < 4:
                continue
            if cross(pts[a], pts[b], pts[c], pts[d]):
                ok = False
                break
        if ok:
            chosen.append((a, b))
    return chosen
