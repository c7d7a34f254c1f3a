"""
Wreath products and automorphisms of decorations
================================================

Each element of the wreath product is a permutation of the skeleton plus one
tree automorphism per point and per cover.  Acting on the decoration turns it
into an automorphism; here we check that this map is a bijection onto Aut(Dec).
"""

import random

from cfpo.fixtures import chain2, curated_inputs, point_tree, tree_V
from cfpo.wreath import verify_wreath_iso, wreath_group

W = wreath_group(chain2(), tree_V(), point_tree())
print("|W| =", W.order)

# swap the two leaves above x0 only
w = W.element_from_json({"eta": {"x0": {"s1": "s2", "s2": "s1"}}})
print("x0/s1 ->", W.mu_apply(w, "x0/s1"), "  x1/s1 ->", W.mu_apply(w, "x1/s1"))

# products act right to left, like permutations
rng = random.Random(1)
a, b = W.random_element(rng), W.random_element(rng)
print("mu(ab) = mu(a) mu(b):", W.to_aut(W.compose(a, b)) == W.to_aut(a) * W.to_aut(b))

for name, (X, S, TL) in curated_inputs().items():
    r = verify_wreath_iso(X, S, TL)
    print(f"{name:>11}: |W|={r.order_w:<4} |Aut|={r.order_aut:<4} hom={r.homomorphism} "
          f"inj={r.injective} onto={r.surjective} ({'all' if r.exhaustive else 'sampled'} pairs)")
