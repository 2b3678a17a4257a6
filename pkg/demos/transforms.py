"""Holographic transformations keep the Holant value of a bipartite grid.

Run: python demos/transforms.py
"""

import random

from holant.grid import brute_holant
from holant.instances import random_arities, random_dense_signature, random_grid
from holant.matchgate import H2
from holant.scalar import format_scalar
from holant.signatures import equality
from holant.transform import to_bipartite, transform_grid, transform_signature

for k in range(1, 6):
    print("H on =%d:" % k, transform_signature(equality(k), H2))

rng = random.Random(11)
g = to_bipartite(random_grid(random_arities(rng, 6), random_dense_signature, rng))
T = [[1, 2], [3, -1]]
print("before %s, after %s" % (format_scalar(brute_holant(g)), format_scalar(brute_holant(transform_grid(g, T)))))
