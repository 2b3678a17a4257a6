"""Affine, product-type and arity-2 grids evaluated in polynomial time, checked
against brute force.

Run: python demos/tractable_classes.py
"""

import random

from holant.grid import brute_holant
from holant.instances import (
    random_affine_signature, random_arities, random_dense_signature, random_grid, random_product_signature,
)
from holant.scalar import format_scalar
from holant.tractable import eval_affine, eval_arity_le2, eval_product, is_affine

rng = random.Random(7)
for name, ev, make, choices in [("affine", eval_affine, random_affine_signature, (2, 3, 4)),
                                ("product", eval_product, random_product_signature, (2, 3, 4)),
                                ("arity2", eval_arity_le2, random_dense_signature, (1, 2))]:
    g = random_grid(random_arities(rng, 10, choices), make, rng)
    while g.num_edges < 8:
        g = random_grid(random_arities(rng, 10, choices), make, rng)
    print("%-8s %2d edges  fast %-12s brute %s" % (
        name, g.num_edges, format_scalar(ev(g)), format_scalar(brute_holant(g))))

w = is_affine(random_affine_signature(3, rng))
print("an affine witness:", w)
