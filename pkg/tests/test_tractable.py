import random

import pytest

from holant.grid import GridBuilder, brute_holant
from holant.instances import (
    rand_rational, random_affine_signature, random_arities, random_dense_signature, random_grid,
    random_product_signature,
)
from holant.scalar import Exact, I
from holant.signatures import DenseSignature, SymSignature, class_membership, dense_of, equality, sym, tag_names
from holant.tractable import (
    AffineFunction, TractableError, UndecidedArity, eval_affine, eval_arity_le2, eval_product, is_affine,
    is_product_type,
)


def star(center, leaves):
    b = GridBuilder()
    b.add("c", center)
    for i, f in enumerate(leaves):
        b.add(i, f)
        b.connect("c", i)
    return b.build()


def chain(sigs, closed=False):
    b = GridBuilder()
    for i, f in enumerate(sigs):
        b.add(i, f)
    for i in range(len(sigs) - 1):
        b.connect(i, i + 1)
    if closed:
        b.connect(len(sigs) - 1, 0)
    return b.build()


def test_is_affine_examples():
    w = is_affine(dense_of(equality(3)))
    assert w is not None and w.table() == list(dense_of(equality(3)).table)
    w = is_affine(dense_of(sym(1, 1, -1, -1)))
    assert w is not None and w.table() == list(dense_of(sym(1, 1, -1, -1)).table)
    assert is_affine(dense_of(sym(1, 1, 0))) is None
    assert is_affine(dense_of(sym(1, I))) is not None
    assert is_affine(dense_of(sym(1, 2))) is None


def test_is_affine_witnesses():
    rng = random.Random(1)
    for _ in range(40):
        k = rng.randint(1, 5)
        f = random_affine_signature(k, rng)
        w = is_affine(f)
        assert w is not None
        assert w.table() == list(f.table)


def test_affine_agrees_with_symmetric_tag():
    rng = random.Random(2)
    vals = [0, 1, -1, I, -I, 2]
    for _ in range(150):
        n = rng.randint(1, 4)
        f = SymSignature([rng.choice(vals) for _ in range(n + 1)])
        tagged = "A_sym" in tag_names(class_membership(f))
        assert (is_affine(dense_of(f)) is not None) == tagged, f


def test_is_product_examples():
    w = is_product_type(dense_of(sym(0, 1, 0)))
    assert w is not None and w.neq == [(0, 1)] and not w.eq
    w = is_product_type(dense_of(equality(3)))
    assert w is not None and sorted(w.eq) == [(0, 1), (0, 2)]
    assert is_product_type(dense_of(sym(1, 1, 1, 0))) is None


def test_product_witnesses():
    rng = random.Random(3)
    for _ in range(40):
        f = random_product_signature(rng.randint(1, 5), rng)
        w = is_product_type(f)
        assert w is not None and w.table() == list(f.table)


def test_search_bound():
    big = DenseSignature(9, [Exact(1)] * 512)
    with pytest.raises(UndecidedArity):
        is_affine(big)
    with pytest.raises(UndecidedArity):
        is_product_type(big)


def test_eval_affine_examples():
    assert eval_affine(star(equality(3), [sym(1, 1)] * 3)) == 2
    assert eval_affine(star(sym(1, 1, -1, -1), [sym(1, 1)] * 3)) == 0


def test_eval_affine_scale():
    rng = random.Random(4)
    g = random_grid([3, 3, 2], random_affine_signature, rng)
    base = eval_affine(g)
    w = is_affine(g.vertices[0])
    scaled = AffineFunction(w.arity, w.A, w.alphas, w.lam * 5)
    assert eval_affine(g, {0: scaled}) == 5 * base


def test_eval_affine_ten_variables():
    rng = random.Random(5)
    g = random_grid([3, 3, 3, 3, 4, 4], random_affine_signature, rng)
    assert g.num_edges == 10
    assert eval_affine(g) == brute_holant(g)


def test_eval_product_examples():
    b = GridBuilder()
    for v in range(3):
        b.add(v, sym(0, 1, 0))
    b.connect(0, 1)
    b.connect(1, 2)
    b.connect(2, 0)
    assert eval_product(b.build()) == 0
    assert eval_product(chain([sym(1, 1)] + [sym(1, 0, 1)] * 3 + [sym(1, 1)])) == 2


def test_eval_arity2_examples():
    assert eval_arity_le2(chain([sym(1, 0, 1)] * 4, closed=True)) == 2
    assert eval_arity_le2(chain([sym(1, 1), sym(1, 2, 4), sym(1, 1)])) == 9
    assert eval_arity_le2(chain([sym(0, 1, 0)] * 2, closed=True)) == 2
    with pytest.raises(TractableError):
        eval_arity_le2(star(equality(3), [sym(1, 1)] * 3))


def test_not_in_class():
    g = star(sym(1, 1, 1, 0), [sym(1, 1)] * 3)
    with pytest.raises(TractableError):
        eval_affine(g)
    with pytest.raises(TractableError):
        eval_product(g)


@pytest.mark.parametrize("seed", range(5))
def test_random_against_brute(seed):
    rng = random.Random(100 + seed)
    for _ in range(8):
        g = random_grid(random_arities(rng), random_affine_signature, rng)
        assert eval_affine(g) == brute_holant(g)
        g = random_grid(random_arities(rng), random_product_signature, rng)
        assert eval_product(g) == brute_holant(g)
        g = random_grid(random_arities(rng, choices=(1, 2)), random_dense_signature, rng)
        assert eval_arity_le2(g) == brute_holant(g)
