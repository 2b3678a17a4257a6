"""Planar Ising partition functions through matchgates under the basis [[1,1],[1,-1]].

Each edge of a planar graph carries the binary constraint [x,y,x]; variables are
equalities.  Under H the equalities become [1,0,1,0,...] and [x,y,x] stays
matchgate-realizable, so the whole grid becomes a perfect matching count.

Run: python demos/holographic_ising.py
"""

import random

from holant.classify import classify_pl_csp
from holant.grid import brute_holant
from holant.instances import ising_instance, random_planar_points
from holant.matchgate import H2, holographic_solve
from holant.scalar import format_scalar
from holant.signatures import sym

rng = random.Random(3)
pts, edges = random_planar_points(7, rng, keep=0.8)
ws = [sym(2, 1, 2) for _ in edges]
g, gens = ising_instance(pts, edges, ws)

print(classify_pl_csp([sym(2, 1, 2), sym(1, 0, 0, 1)]))
print("vertices %d, edges %d" % (len(pts), len(edges)))
print("holographic:", format_scalar(holographic_solve(g, H2, gens)))
if g.num_edges <= 24:
    print("brute force:", format_scalar(brute_holant(g, cap=24)))
