"""Independent brute-force oracles used to check the library.

Nothing here calls the algorithms under test; values are computed straight
from the definitions with plain loops.
"""

from itertools import permutations, product

from holant.scalar import Exact


def sig_value(f, bits):
    if hasattr(f, "entries"):
        return f.entries[sum(bits)]
    idx = 0
    for b in bits:
        idx = 2 * idx + b
    return f.table[idx]


def holant(vertices, edges, dangling_values=None):
    """Sum over edge assignments of the product of vertex values.

    vertices: {v: signature}; edges: list of ((v, p), (u, q)); dangling_values:
    {(v, p): bit} for ports fixed from outside.
    """
    fixed = dict(dangling_values or {})
    total = Exact(0)
    for asg in product((0, 1), repeat=len(edges)):
        port = dict(fixed)
        for (a, b), x in zip(edges, asg):
            port[a] = x
            port[b] = x
        term = Exact(1)
        for v, f in vertices.items():
            k = f.arity if hasattr(f, "arity") else len(f.entries) - 1
            term = term * sig_value(f, [port[(v, p)] for p in range(k)])
            if term.is_zero():
                break
        total = total + term
    return total


def grid_holant(grid):
    return holant(grid.vertices, grid.edges)


def gate_table(grid):
    out = []
    k = len(grid.dangling)
    for w in range(1 << k):
        bits = [(w >> (k - 1 - j)) & 1 for j in range(k)]
        fixed = {ep: b for (_, ep), b in zip(grid.dangling, bits)}
        out.append(holant(grid.vertices, grid.edges, fixed))
    return out


def perfect_matchings(vertices, edges):
    """Weighted perfect matching sum by recursion on the first unmatched vertex."""
    vertices = list(vertices)

    def rec(free):
        if not free:
            return Exact(1)
        v = free[0]
        s = Exact(0)
        for u, x, w in edges:
            if u == x:
                continue
            other = x if u == v else u if x == v else None
            if other is None or other not in free[1:]:
                continue
            rest = [y for y in free if y not in (v, other)]
            s = s + w * rec(rest)
        return s

    return rec(vertices)


def pfaffian_by_definition(M):
    """Sum over perfect matchings of {0..n-1} with the crossing sign."""
    n = len(M)
    if n % 2:
        return Exact(0)

    def rec(free):
        if not free:
            return Exact(1)
        i = free[0]
        s = Exact(0)
        for pos in range(1, len(free)):
            j = free[pos]
            sign = -1 if (pos - 1) % 2 else 1
            rest = free[1:pos] + free[pos + 1:]
            s = s + sign * M[i][j] * rec(rest)
        return s

    return rec(list(range(n)))


def det_by_permutations(M):
    n = len(M)
    total = Exact(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Exact(1)
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + (-term if inv % 2 else term)
    return total


def tensor_transform(table, n, T):
    """(T^{(x)n} f)(b) = sum_a prod T[b_i][a_i] f(a)."""
    out = []
    for bi in product((0, 1), repeat=n):
        s = Exact(0) * 0 + table[0] * 0
        for ai, val in zip(product((0, 1), repeat=n), table):
            c = val
            for b, a in zip(bi, ai):
                c = c * T[b][a]
            s = s + c
        out.append(s)
    return out
