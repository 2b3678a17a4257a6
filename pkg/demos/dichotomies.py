"""Verdicts of the dichotomy classifiers on a few classic signature sets.

Run: python demos/dichotomies.py
"""

from fractions import Fraction

from holant.classify import FRAMEWORKS, classify_23regular
from holant.scalar import Exact
from holant.signatures import sym

cases = [
    ("holant-star", [sym(1, 0, 1, 0)]),
    ("holant-c", [sym(1, 0, 0, -1)]),
    ("pl-holant-c", [sym(2, 0, 1, 0, Exact(Fraction(1, 2)))]),
    ("pl-holant-c", [sym(1, 0, 1, 0, -1)]),
    ("csp", [sym(1, 1, -1, -1)]),
    ("pl-csp", [sym(3, 5, 3)]),
]
for fw, F in cases:
    res = FRAMEWORKS[fw](F)
    print("%-12s %-24s %s" % (fw, F, res.verdict))

print()
# Vertex counting on 3-regular graphs with edge weight y: Holant([y0,y1,y2] | =3).
for y in (sym(1, 1, 1), sym(1, 1, -1), sym(1, 0, -1), sym(0, 1, 0), sym(1, 2, 1), sym(1, 2, 3)):
    res = classify_23regular(y, sym(1, 0, 0, 1))
    print("%-10s %-22s category %s" % (y, res.verdict, res.witness.get("category", "-")))
