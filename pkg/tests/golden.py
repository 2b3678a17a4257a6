"""Frozen golden tables shared by the unit tests and the acceptance suite."""

from fractions import Fraction

from holant.classify import GENERAL, HARD, HARD_PLANAR, PLANAR_ONLY
from holant.scalar import Exact
from holant.signatures import sym

half = Exact(Fraction(1, 2))
third = Exact(Fraction(1, 3))
EQ3 = sym(1, 0, 0, 1)

# (framework, signatures, verdict, expected witness items)
CLASSIFY_TABLE = [
    ("holant-star", [sym(1, 0, 1, 0)], GENERAL, {"case": 2, "b": 0}),
    ("holant-star", [EQ3], GENERAL, {"case": 2, "a": 0}),
    ("holant-star", [EQ3, sym(1, 1, 0)], HARD_PLANAR, {}),
    ("holant-star", [sym(1, 0, -1, 0, 1)], GENERAL, {"case": 3}),
    ("holant-c", [sym(1, 0, 0, -1)], GENERAL, {"families": {"F1"}}),
    ("holant-c", [sym(2, 0, 1, 0, half)], HARD, {}),
    ("holant-c", [sym(1, 1, 2)], GENERAL, {"case": 1}),
    ("pl-holant-c", [sym(2, 0, 1, 0, half)], PLANAR_ONLY, {"matchgates": ["EvenStd"]}),
    ("pl-holant-c", [sym(3, 0, 1, 0, third)], PLANAR_ONLY, {}),
    ("pl-holant-c", [sym(1, 0, 1, 0, -1)], HARD_PLANAR, {}),
    ("pl-holant-c", [sym(1, 0, 1, 0, 2)], HARD_PLANAR, {}),
    ("pl-holant-c", [sym(0, 0, 1, 0, 0)], HARD_PLANAR, {}),
    ("csp", [EQ3, sym(0, 1, 0)], GENERAL, {"classes": {"A", "P"}}),
    ("csp", [sym(1, 1, -1, -1)], GENERAL, {"classes": {"A"}}),
    ("csp", [sym(1, 1, 0)], HARD, {}),
    ("pl-csp", [sym(3, 5, 3)], PLANAR_ONLY, {"forms": ["Form1"]}),
    ("pl-csp", [sym(1, 1, 0)], HARD_PLANAR, {}),
    ("pl-csp", [EQ3], GENERAL, {}),
    ("23reg", [sym(1, 1, 1), EQ3], GENERAL, {"category": 1}),
    ("23reg", [sym(1, 1, -1), EQ3], GENERAL, {"category": 2}),
    ("23reg", [sym(1, 0, -1), EQ3], GENERAL, {"category": 3}),
    ("23reg", [sym(0, 1, 0), EQ3], GENERAL, {"category": 4}),
    ("23reg", [sym(1, 2, 1), EQ3], PLANAR_ONLY, {"category": 5}),
    ("23reg", [sym(1, 2, 3), EQ3], HARD_PLANAR, {}),
    ("23reg", [sym(0, 1, 1), sym(1, 1, 0, 0)], GENERAL, {}),
    ("23reg", [sym(3, -1, 1), sym(1, 1, 0, 0)], PLANAR_ONLY, {}),
    ("23reg", [sym(1, 0, 1), sym(1, 1, 0, 0)], HARD_PLANAR, {}),
]

# (gadget, params, expected entries: symmetric, or the full table for arity-4 dense gadgets)
GADGET_TABLE = [
    ("join-a000b", {"a": 2, "b": 3}, [4, 0, 9]),
    ("fig2-H", {"x": 3}, [1, 0, 0, 1, 0, 3, 1, 0, 0, 1, 3, 0, 1, 0, 0, 9]),
    ("fig2-H-bundled", {"x": 3}, [1, 1, 9]),
    ("fig3-H2i", {"i": 1}, [1, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 1]),
    ("fig3-H2i", {"i": 2}, [1, 0, 0, 0, 0, 8, 8, 0, 0, 8, 8, 0, 0, 0, 0, 1]),
    ("fig4-chain", {"a": 2, "steps": 1}, [0, 35, 0, 160]),
    ("fig4-chain", {"a": 2, "steps": 2}, [0, 2125, 0, 11450]),
    ("fig-1010", {"f": [1, 0, 1, 0, -1], "pin": [1, 0]}, [8, 0, 4, 0]),
    ("fig-1010", {"f": [1, 0, 1, 0, 0], "pin": [1, 0]}, [8, 0, 5, 0]),
    ("fig-1010", {"f": [-1, 0, 1, 0, 1], "pin": [0, 1]}, [0, 4, 0, 8]),
    ("fig-1010", {"f": [-1, 0, 1, 0, 0], "pin": [0, 1]}, [0, 1, 0, 3]),
    ("fig6-1a2b", {"a": 2, "b": 3}, [1, 12, 9]),
    ("fig7-g0", {"v": 2}, [14, 5, 2, 1]),
    ("fig8-g1", {"v": 2}, [6, 2, 1]),
    ("lemma53-fan", {"a": 3, "j": 2}, [10, 6]),
    ("binary-chain", {"a": 2, "j": 3}, [1, 0, 8]),
]
