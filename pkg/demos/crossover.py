"""The planar crossover: a nine-vertex gadget built from [a,0,1,0,b]-type signatures
whose normalized signature is the cross function, for any c = ab other than 1.

Run: python demos/crossover.py
"""

from fractions import Fraction

from holant.gadgets import crossover_params, crossover_report
from holant.scalar import Exact, format_scalar

for c in (Exact(17), Exact(2), Exact(3), Exact(-1), Exact(Fraction(1, 2)), Exact(0)):
    p = crossover_params(c)
    rep = crossover_report(p)
    print("c=%-4s x=%-24s A=%-26s D=%-10s residual %.1e" % (
        format_scalar(c), format_scalar(p.x), format_scalar(rep["A"]), format_scalar(rep["D"]), rep["residual"]))

try:
    crossover_params(1)
except ValueError as exc:
    print("c=1:", exc)
