import random
from fractions import Fraction
from itertools import product

import pytest

from holant.instances import rand_rational
from holant.scalar import Exact
from holant.signatures import (
    ArityError, DenseSignature, SymSignature, canonicalize, class_membership, dense_of,
    from_symmetric, is_degenerate, join, pin, proportional, self_join, sym, tag_names,
    to_symmetric, vanishing2_pair,
)

from oracle import holant

a, b = Exact(3), Exact(Fraction(-1, 2))


def test_from_symmetric_tables():
    assert list(from_symmetric(sym(1, 0, 1)).table) == [1, 0, 0, 1]
    eq3 = from_symmetric(sym(1, 0, 0, 1))
    assert [eq3.value(bits) for bits in product((0, 1), repeat=3)] == [1, 0, 0, 0, 0, 0, 0, 1]
    assert list(from_symmetric(sym(0, 1)).table) == [0, 1]


def test_dense_index_order():
    d = DenseSignature(2, [1, 2, 3, 4])
    assert d.value((0, 1)) == 2 and d.value((1, 0)) == 3
    assert to_symmetric(d) is None
    assert to_symmetric(DenseSignature(2, [1, 2, 2, 4])) == sym(1, 2, 4)


def test_arity_mismatch():
    with pytest.raises(ValueError):
        DenseSignature(2, [1, 2, 3])


def test_is_degenerate():
    lam, u = is_degenerate(sym(1, 2, 4))
    assert lam == 1 and u == sym(1, 2)
    assert is_degenerate(sym(1, 0, 1)) is None
    lam, u = is_degenerate(sym(1, 1, 1, 1))
    assert lam == 1 and u == sym(1, 1)
    lam, u = is_degenerate(sym(0, 0, 5))
    assert lam == 5 and u == sym(0, 1)
    assert is_degenerate(sym(0, 1, 0)) is None


def test_pin():
    f = sym(a, 0, 1, 0, b)
    assert pin(f, 0, 2) == sym(a, 0, 1)
    assert pin(f, 1, 2) == sym(1, 0, b)
    assert pin(sym(0, 1, 0, 0), 1, 1) == sym(1, 0, 0)
    with pytest.raises(ArityError):
        pin(sym(1, 0, 1), 0, 3)


def test_join_examples():
    f = sym(a, 0, 0, 0, b)
    assert join(f, f, 3) == sym(a * a, 0, b * b)
    assert join(sym(1, 0, a), sym(1, 0, a), 1) == sym(1, 0, a * a)
    assert join(sym(1, 1), sym(1, 0, 1), 1) == sym(1, 1)
    with pytest.raises(ArityError):
        join(sym(1, 2, 3), sym(1, 0, 5), 1)


def _join_oracle(f, g, j):
    n, m = f.arity, g.arity
    verts = {"f": f, "g": g}
    edges = [(("f", n - j + k), ("g", m - j + k)) for k in range(j)]
    out = []
    for bits in product((0, 1), repeat=n + m - 2 * j):
        fixed = {("f", p): bits[p] for p in range(n - j)}
        fixed.update({("g", q): bits[n - j + q] for q in range(m - j)})
        out.append(holant(verts, edges, fixed))
    return out


def test_join_matches_contraction():
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        # equalities and their relatives keep the join symmetric
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        j = rng.randint(0, min(n, m))
        f = sym([rand_rational(rng)] + [0] * (n - 1) + [rand_rational(rng)]) if n > 1 else sym(rand_rational(rng), rand_rational(rng))
        g = sym([rand_rational(rng)] + [0] * (m - 1) + [rand_rational(rng)]) if m > 1 else sym(rand_rational(rng), rand_rational(rng))
        try:
            h = join(f, g, j)
        except ArityError:
            continue
        assert list(from_symmetric(h).table) == _join_oracle(f, g, j)
        checked += 1
    assert checked > 20


def test_self_join():
    assert self_join(sym(a, 0, 1, 0, b), 1) == sym(a + 1, 0, 1 + b)
    assert self_join(sym(1, 0, 0, 1), 1) == sym(1, 1)
    assert self_join(sym(1, 0, 1), 1) == sym(2)


def test_class_membership_examples():
    assert tag_names(class_membership(sym(1, 1, -1, -1))) == {"A_sym", "F3", "G3", "Vanishing3"}
    fg = {"F1", "F2", "F3", "G1", "G2", "G3"}
    assert tag_names(class_membership(sym(1, 0, 0, 5))) & fg == {"G1"}
    t = tag_names(class_membership(sym(0, 1, 0, 1)))
    assert {"F2", "G2", "A_sym"} <= t
    assert t & (fg | {"A_sym"}) == {"F2", "G2", "A_sym"}


def test_class_tags_regenerate():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(1, 4)
        f = sym([rand_rational(rng, -2, 2, 1) for _ in range(n + 1)])
        for tag in class_membership(f):
            if tag.name == "Degenerate":
                lam, u = tag.params
                x, y = u.entries
                assert [lam * x ** (n - i) * y ** i for i in range(n + 1)] == list(f.entries)
            if tag.name == "Vanishing2" and n > 2:
                p, q = tag.params
                e = f.entries
                assert all((p * e[k] + q * e[k + 1] - p * e[k + 2]).is_zero() for k in range(n - 1))
            if tag.name == "Vanishing3":
                e = f.entries
                assert all((e[k] + e[k + 2]).is_zero() for k in range(n - 1)) or n == 2


def test_vanishing2_common_pair():
    ab = vanishing2_pair([sym(1, 0, 1, 0), sym(1, 0, 1)])
    assert ab is not None and ab[1] == 0
    assert vanishing2_pair([sym(1, 0, 0, 1), sym(1, 1, 0)]) is None


def test_canonicalize():
    assert canonicalize(sym(2, 0, 2)) == sym(1, 0, 1)
    assert canonicalize(sym(0, 3, 0, 6)) == sym(0, 1, 0, 2)
    assert canonicalize(sym(0, 0, 0)) == sym(0, 0, 0)


def test_proportional():
    assert proportional(sym(1, 2, 3), sym(2, 4, 6))
    assert not proportional(sym(1, 2, 3), sym(1, 2, 4))


def test_dense_of_roundtrip():
    f = sym(1, 2, 3, 4)
    assert to_symmetric(dense_of(f)) == f
