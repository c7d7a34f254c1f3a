"""
Automorphisms, orbits and subgroups
===================================
"""

import random

from cfpo.fixtures import dec_E3, poset_A, random_poset
from cfpo.groups import (automorphism_group, element_order_profile, naive_automorphisms, orbits_report,
                         stabilizer, subgroup_enumerate)

G = automorphism_group(poset_A())
print("|Aut(A)| =", G.order, "orbits:", [sorted(o) for o in orbits_report(G, poset_A().elements).orbits])

D = dec_E3()
H = automorphism_group(D.base)
K = stabilizer(H, D.skeleton, mode="pointwise")
print("|Aut(E3)| =", H.order, " fixing the skeleton pointwise:", K.order)
print("element orders:", dict(element_order_profile(K)))
print("subgroups of the stabilizer:", len(subgroup_enumerate(K)))

# refinement search against trying every bijection
rng = random.Random(0)
for _ in range(5):
    P = random_poset(rng, 6)
    print(len(P.covers), "covers:", automorphism_group(P).order, "==", len(naive_automorphisms(P)))
