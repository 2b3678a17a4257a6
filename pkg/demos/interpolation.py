"""Polynomial interpolation of a unary signature from a recursive construction.

The grid below uses f = [3,5] twice.  Replacing f by the iterates of
(A, g) = ([[1,1],[1,0]], [1,0]) gives three solvable instances; the
Vandermonde system they define pins down the original value.

Run: python demos/interpolation.py
"""

from holant.gadgets import RecursiveConstruction, check_interpolation_conditions, fig4_matrix, solve_interpolation
from holant.grid import GridBuilder, brute_holant
from holant.scalar import format_scalar
from holant.signatures import sym

b = GridBuilder()
b.add("c", sym(1, 2, 0, 1))
b.add("f1", sym(3, 5))
b.add("f2", sym(3, 5))
b.add("u", sym(1, -1))
for v in ("f1", "f2", "u"):
    b.connect("c", v)
grid = b.build()

rc = RecursiveConstruction([[1, 1], [1, 0]], (1, 0))
print(check_interpolation_conditions(rc).diagnostics)
res = solve_interpolation(grid, sym(3, 5), rc)
for (x, y), h in zip(res.points, res.holants):
    print("f -> [%s,%s]: %s" % (format_scalar(x), format_scalar(y), format_scalar(h)))
print("recovered %s, brute force %s" % (format_scalar(res.value), format_scalar(brute_holant(grid))))

for a in (2, 1, -1):
    chk = check_interpolation_conditions(RecursiveConstruction(fig4_matrix(a), (1, a)))
    print("recurrence matrix at a=%d: %s  %s" % (a, chk.ok, chk.diagnostics[-1]))
