import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cfpo.decoration import decorate, is_join_rich, skeleton_of
from cfpo.fixtures import (dec_ABB, dec_E2, dec_E3, dec_E4, poset_A, random_cfpo, random_tree,
                           tree_T3, tree_V)
from cfpo.order import empty_poset, is_cfpo


def test_abb_counts():
    D = dec_ABB()
    assert len(D) == 14
    assert [len(D.of_kind(k)) for k in ("skeleton", "above", "between")] == [5, 5, 4]


def test_empty_skeleton():
    assert len(decorate(empty_poset(), tree_V(), tree_T3())) == 0


def test_no_decoration_is_identity():
    D = decorate(poset_A(), None, None)
    assert D.base == poset_A()
    assert skeleton_of(D) == poset_A()


def test_e2_between_point():
    D = dec_E2()
    assert len(D) == 9
    P = D.base
    assert P.less("x0", "x0..x1/t") and P.less("x0..x1/t", "x1")


def test_sizes_formula():
    # |X| + |X||S| + |X_ap||T|
    assert len(dec_E3()) == 5 + 5 * 1 + 4 * 4
    assert len(dec_E4()) == 5 + 5 * 3 + 4 * 1


def test_between_copy_order():
    D = dec_E3()
    P = D.base
    # chain copies lie strictly between the anchors, off-chain leaves only above a0
    assert P.less("a0", "a0..c/t0") and P.less("a0..c/t1", "c")
    assert P.less("a0", "a0..c/w1") and not P.comparable("a0..c/w1", "c")
    assert not P.comparable("a0..c/w1", "a0..c/w2")


def test_above_copy_sits_over_point():
    D = dec_E4()
    P = D.base
    assert P.less("c", "c/s0") and P.less("c/s0", "c/s1")
    assert P.upper_covers("c") == ("c..b0/p", "c..b1/p", "c/s0")


def test_join_rich():
    ok, non_joins = is_join_rich(poset_A())
    assert not ok and non_joins == ["a0", "a1", "b0", "b1"]
    assert is_join_rich(empty_poset()) == (False, [])


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_random_decorations_are_cfpo(seed):
    rng = random.Random(seed)
    X = random_cfpo(rng, rng.randint(1, 6))
    S = random_tree(rng, rng.randint(1, 4), "s")
    TL = random_tree(rng, rng.randint(1, 4), "t", chained=True)
    D = decorate(X, S, TL)
    assert is_cfpo(D.base)[0]
    assert len(D) == len(X) * (1 + len(S)) + len(X.covers) * len(TL)
    assert skeleton_of(D) == X
