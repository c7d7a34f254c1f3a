import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfpo.decompose import ATTACHED, BETWEEN_PAIR, DecompositionError, classify_components, decompose, suggest_candidates
from cfpo.decoration import decorate
from cfpo.fixtures import (chain2, curated_inputs, dec_ABB, dec_E2, dec_E4, poset_A, point_tree, random_cfpo,
                           random_tree, tree_T3, tree_V)
from cfpo.groups import find_isomorphism


def same_tree(a, b):
    if a is None or b is None:
        return a is None and b is None
    pa = {"L": a.chain} if a.chain is not None else None
    pb = {"L": b.chain} if b.chain is not None else None
    return find_isomorphism(a.base, b.base, predicates_p=pa, predicates_q=pb) is not None


def test_verdicts_abb():
    D = dec_ABB()
    vs = classify_components(D.base, D.skeleton)
    assert sum(v.kind == ATTACHED for v in vs) == 5
    assert sum(v.kind == BETWEEN_PAIR for v in vs) == 4
    assert classify_components(poset_A(), poset_A().elements) == []


def test_round_trip_V_T3():
    D = decorate(poset_A(), tree_V(), tree_T3())
    dec = decompose(D.base, D.skeleton)
    assert find_isomorphism(dec.X, poset_A()) is not None
    assert same_tree(dec.S, tree_V())
    assert same_tree(dec.TL, tree_T3())
    assert dec.aut_order_M == dec.aut_order_dec == 2048
    assert dec.equivariant


def test_round_trip_e2():
    D = dec_E2()
    dec = decompose(D.base, D.skeleton)
    assert same_tree(dec.S, tree_V()) and same_tree(dec.TL, point_tree())
    assert find_isomorphism(dec.X, chain2()) is not None


def test_everything_skeleton():
    dec = decompose(poset_A(), poset_A().elements)
    assert dec.S is None and dec.TL is None


def test_curated_groups_match():
    for name, (X, S, TL) in curated_inputs().items():
        D = decorate(X, S, TL)
        dec = decompose(D.base, D.skeleton)
        assert dec.aut_order_M == dec.aut_order_dec, name
        assert dec.abstract_iso and dec.equivariant, name


def test_not_a_decoration():
    D = dec_E4()
    with pytest.raises(DecompositionError):
        decompose(D.base, {"a0", "c"})


def test_suggest():
    assert frozenset({"x0", "x1"}) in suggest_candidates(dec_E2().base)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_random_round_trip(seed):
    rng = random.Random(seed)
    X = random_cfpo(rng, rng.randint(1, 5), connected=True)
    S = random_tree(rng, rng.randint(1, 3), "s")
    TL = random_tree(rng, rng.randint(1, 3), "t", chained=True)
    D = decorate(X, S, TL)
    dec = decompose(D.base, D.skeleton, check_groups=False)
    assert dec.X == X
    assert same_tree(dec.S, S)
    if X.covers:
        assert same_tree(dec.TL, TL)
    # the witness is an order isomorphism from the rebuilt decoration onto the input
    assert dec.rebuilt.base.relabel(dec.witness) == D.base
