import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cfpo.fixtures import chain2, dec_E3, poset_A, random_poset, tree_T3
from cfpo.groups import (Perm, PermGroup, automorphism_group, find_isomorphism, group_isomorphic,
                         naive_automorphisms, orbits, orbits_report, stabilizer, subgroup_enumerate,
                         symmetric_group, trivial_group)
from cfpo.order import antichain, chain_poset

import oracles


def cyclic(n):
    dom = [f"p{i}" for i in range(n)]
    return PermGroup(dom, [tuple((i + 1) % n for i in range(n))])


def klein():
    dom = ["p0", "p1", "p2", "p3"]
    return PermGroup(dom, [(1, 0, 2, 3), (0, 1, 3, 2)])


def test_aut_A():
    G = automorphism_group(poset_A())
    assert G.order == 4
    assert G.order == len(oracles.all_automorphisms(poset_A().elements, poset_A().lt))


def test_aut_chain_and_antichain():
    assert automorphism_group(chain_poset(5)).order == 1
    assert automorphism_group(antichain(3)).order == 6


def test_aut_T3_with_chain():
    T = tree_T3()
    G = automorphism_group(T.base, predicates={"L": T.chain})
    assert G.order == 2
    assert automorphism_group(T.base).order == 6  # L not preserved: S3 on the leaves


def test_perm_convention():
    dom = ("a", "b", "c")
    p = Perm.from_dict(dom, {"a": "b", "b": "a"})
    q = Perm.from_dict(dom, {"b": "c", "c": "b"})
    # (p*q)(x) = p(q(x))
    assert (p * q)("b") == p(q("b")) == "c"
    assert p.conjugate(q) == q * p * q.inverse()


def test_orbits():
    G = automorphism_group(poset_A())
    assert orbits(G) == [{"a0", "a1"}, {"b0", "b1"}, {"c"}]
    rep = orbits_report(G, poset_A().elements, poset_A())
    assert not rep.transitive_on_A
    assert orbits(trivial_group(("x", "y"))) == [{"x"}, {"y"}]
    S3 = symmetric_group(antichain(3).elements)
    assert orbits_report(S3, antichain(3).elements).transitive_on_A


def test_stabilizers():
    D = dec_E3()
    G = automorphism_group(D.base)
    assert stabilizer(G, D.skeleton, mode="pointwise").order == 16
    assert stabilizer(G, [], mode="pointwise").order == G.order
    assert stabilizer(G, D.elements, mode="pointwise").order == 1


def test_subgroup_counts():
    assert len(subgroup_enumerate(klein())) == 5
    assert len(subgroup_enumerate(trivial_group(("x",)))) == 1
    assert len(subgroup_enumerate(cyclic(4))) == 3
    assert len(subgroup_enumerate(symmetric_group(antichain(3).elements))) == 6


def test_subgroups_against_oracle():
    for G in (klein(), cyclic(6), symmetric_group(antichain(4).elements)):
        ours = {frozenset(H.element_tuples) for H in subgroup_enumerate(G)}
        assert ours == oracles.all_subgroups(G.element_tuples)


def test_group_isomorphism():
    assert group_isomorphic(klein(), cyclic(4)) is None
    assert group_isomorphic(cyclic(4), cyclic(4)) is not None
    assert group_isomorphic(automorphism_group(poset_A()), klein()) is not None
    S3 = symmetric_group(antichain(3).elements)
    assert group_isomorphic(S3, cyclic(6)) is None


def test_find_isomorphism():
    P = chain2()
    Q = chain_poset(2, prefix="y")
    assert find_isomorphism(P, Q) == {"x0": "y0", "x1": "y1"}
    assert find_isomorphism(P, antichain(2)) is None


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 7))
def test_pruned_search_matches_naive(seed, n):
    P = random_poset(random.Random(seed), n, density=random.Random(seed).choice([0.2, 0.4, 0.6]))
    ours = set(automorphism_group(P).element_tuples)
    assert ours == naive_automorphisms(P)
    assert len(ours) == len(oracles.all_automorphisms(P.elements, P.lt))
