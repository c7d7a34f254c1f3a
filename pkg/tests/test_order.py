import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfpo.fixtures import chain2, crown, diamond, poset_A, random_cfpo, random_poset, tree_T3
from cfpo.order import (ChainedTree, OrderError, adjacent_pairs, antichain, boundary, build_poset,
                        components, components_mod, is_cfpo, path, validate_tree)

import oracles


def test_fixture_A_closure():
    A = poset_A()
    assert len(A.lt) == 8
    assert set(A.lt) == oracles.closure_pairs(A.elements, A.covers)


def test_single_point_and_cycle():
    P = build_poset(["x"], [])
    assert P.lt == frozenset()
    with pytest.raises(OrderError) as exc:
        build_poset(["x", "y"], [("x", "y"), ("y", "x")])
    assert exc.value.witness == ("x", "y", "x")


def test_reflexive_and_unknown():
    with pytest.raises(OrderError):
        build_poset(["x"], [("x", "x")])
    with pytest.raises(OrderError):
        build_poset(["x"], [("x", "z")])


def test_lt_kind_must_be_transitive():
    with pytest.raises(OrderError):
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")], kind="lt")
    P = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")], kind="lt")
    assert P.covers == {("a", "b"), ("b", "c")}


def test_adjacent_pairs():
    assert adjacent_pairs(poset_A()) == {("a0", "c"), ("a1", "c"), ("c", "b0"), ("c", "b1")}
    assert adjacent_pairs(chain2()) == {("x0", "x1")}
    assert adjacent_pairs(antichain(3)) == frozenset()


def test_is_cfpo_examples():
    assert is_cfpo(poset_A()) == (True, None)
    ok, cyc = is_cfpo(diamond())
    assert not ok and cyc == ("a", "b", "d", "c")
    assert not is_cfpo(crown())[0]


def test_path():
    assert path(poset_A(), "a0", "a1").nodes == ("a0", "c", "a1")
    assert path(poset_A(), "b1", "b1").nodes == ("b1",)
    two = build_poset(["p", "q"], [])
    assert path(two, "p", "q") is None
    with pytest.raises(OrderError):
        path(diamond(), "a", "d")


def test_components_mod():
    parts = components_mod(poset_A(), {"c"})
    assert sorted(sorted(p) for p in parts) == [["a0"], ["a1"], ["b0"], ["b1"]]
    P = build_poset(["p", "q", "r"], [("p", "q")])
    assert sorted(sorted(p) for p in components_mod(P, set())) == sorted(sorted(p) for p in components(P))
    assert components_mod(P, set(P.elements)) == []


def test_boundary():
    assert boundary(poset_A(), {"a0"}) == {"c"}
    assert boundary(poset_A(), set(poset_A().elements)) == frozenset()


def test_validate_tree():
    assert validate_tree(tree_T3()) == (True, "ok")
    assert validate_tree(ChainedTree(build_poset(["t"], []), "t", frozenset({"t"})))[0]
    ok, why = validate_tree(ChainedTree(diamond(), "a", None))
    assert not ok and "down-set of 'd'" in why
    T = tree_T3()
    ok, why = validate_tree(ChainedTree(T.base, "t0", frozenset({"t0"})))
    assert not ok and "maximal" in why


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9))
def test_random_orders_match_oracles(seed, n):
    P = random_poset(random.Random(seed), n)
    assert set(P.lt) == oracles.closure_pairs(P.elements, P.covers)
    assert set(P.covers) == oracles.covers_by_triples(P.elements, P.lt)
    assert is_cfpo(P)[0] == oracles.undirected_cycle_free(P.elements, P.covers)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_paths_in_random_cfpo(seed, n):
    P = random_cfpo(random.Random(seed), n)
    assert is_cfpo(P)[0]
    for x in P.elements:
        for y in P.elements:
            p = path(P, x, y)
            if p is None:
                continue
            nodes = p.nodes
            assert nodes[0] == x and nodes[-1] == y and len(set(nodes)) == len(nodes)
            for u, w in zip(nodes, nodes[1:]):
                assert (u, w) in P.covers or (w, u) in P.covers
