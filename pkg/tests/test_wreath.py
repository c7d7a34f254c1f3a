import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cfpo.fixtures import chain2, curated_inputs, poset_A, point_tree, random_cfpo, random_tree, tree_B, tree_T3, tree_V
from cfpo.groups import automorphism_group
from cfpo.wreath import preserves_order, verify_wreath_iso, wreath_group

import oracles


def test_orders():
    assert wreath_group(poset_A(), tree_B(False), tree_B()).order == 4
    assert wreath_group(chain2(), tree_V(), point_tree()).order == 4
    W = wreath_group(poset_A())
    assert W.order == automorphism_group(poset_A()).order


def test_mu_leaf_swap_e2():
    W = wreath_group(chain2(), tree_V(), point_tree())
    w = W.element_from_json({"eta": {"x0": {"s1": "s2", "s2": "s1"}}})
    assert W.mu_apply(w, "x0/s1") == "x0/s2"
    assert W.mu_apply(w, "x1/s1") == "x1/s1"
    assert W.mu_apply(W.identity(), "x0/s1") == "x0/s1"


def test_mu_skeleton_swap_e3():
    W = wreath_group(poset_A(), tree_B(False), tree_T3())
    w = W.element_from_json({"phi": {"a0": "a1", "a1": "a0"}})
    assert W.mu_apply(w, "a0..c/t0") == "a1..c/t0"
    assert W.mu_apply(w, "a0/p") == "a1/p"
    assert preserves_order(W.decorated.base, W.to_aut(w))


def test_json_round_trip():
    W = wreath_group(poset_A(), tree_V(), tree_B())
    rng = random.Random(3)
    for _ in range(20):
        w = W.random_element(rng)
        assert W.element_from_json(W.element_to_json(w)) == w


def test_composition_acts_right_to_left():
    # image of the product equals composing images, checked pointwise by hand
    W = wreath_group(poset_A(), tree_V(), tree_T3())
    rng = random.Random(0)
    for _ in range(50):
        a, b = W.random_element(rng), W.random_element(rng)
        ab = W.compose(a, b)
        for e in W.decorated.elements:
            assert W.mu_apply(ab, e) == W.mu_apply(a, W.mu_apply(b, e))
        assert W.compose(a, W.invert(a)) == W.identity()


def test_curated_surjective():
    expected = {"Dec(A,B,B)": 4, "E2": 4, "E3": 64, "E4": 128}
    for name, (X, S, TL) in curated_inputs().items():
        r = verify_wreath_iso(X, S, TL)
        assert r.homomorphism and r.injective and r.surjective, name
        assert r.order_w == r.order_aut == expected[name]


def test_e2_against_bijection_oracle():
    X, S, TL = curated_inputs()["E2"]
    W = wreath_group(X, S, TL)
    D = W.decorated
    brute = oracles.all_automorphisms(D.elements, D.base.lt)
    assert len(brute) == 4
    ours = {W.to_aut(w).images for w in W.elements()}
    idx = {x: i for i, x in enumerate(D.elements)}
    assert ours == {tuple(idx[m[x]] for x in D.elements) for m in brute}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_random_instances(seed):
    rng = random.Random(seed)
    X = random_cfpo(rng, rng.randint(1, 5))
    S = random_tree(rng, rng.randint(1, 3), "s")
    TL = random_tree(rng, rng.randint(1, 3), "t", chained=True)
    r = verify_wreath_iso(X, S, TL, samples=500, seed=seed)
    assert r.homomorphism and r.injective
