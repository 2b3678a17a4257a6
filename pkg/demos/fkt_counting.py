"""Counting perfect matchings of planar graphs with a Pfaffian.

Run: python demos/fkt_counting.py
"""

import random
import time

from holant.fkt import count_weighted_pm, grid_graph, kasteleyn_defects, kasteleyn_orient, random_planar_graph, wheel_graph
from holant.scalar import Exact, format_scalar

# Domino tilings of square boards: 2, 36, 6728, 12988816 for n = 2, 4, 6, 8.
for n in (2, 4, 6, 8):
    t0 = time.perf_counter()
    v = count_weighted_pm(grid_graph(n, n))
    print("%dx%d board: %s tilings (%.3fs)" % (n, n, format_scalar(v), time.perf_counter() - t0))

# The orientation behind it: every bounded face has an odd number of clockwise edges.
g = wheel_graph(7)
o = kasteleyn_orient(g)
print("wheel with 7 spokes: %d faces, defects %s" % (len(o.faces), kasteleyn_defects(g, o)))

# Weights may be any Gaussian rationals.
rng = random.Random(0)
g = random_planar_graph(10, rng, keep=0.9, weight=lambda r: Exact(r.randint(1, 3), r.randint(-1, 1)))
print("random weighted planar graph on 10 vertices:", format_scalar(count_weighted_pm(g)))
