"""
Reading the skeleton off the group
==================================

Work only with the automorphism group and support relations between tuples of
its elements.  Some steps recover what the order looked like, and some do not
on these small examples; both are printed.
"""

from cfpo.fixtures import dec_E2, dec_E4, tree_V
from cfpo.groups import Perm, automorphism_group
from cfpo.logic import (ActionStructure, classify_report, extract_skeleton, function_part, indec_pd, meets_x,
                        pointwise_skeleton_stabilizer)

AS = ActionStructure(dec_E2())
leaf_swap = Perm.from_dict(AS.D.elements, {"x0/s1": "x0/s2", "x0/s2": "x0/s1"})
print("gate of a leaf swap:", indec_pd(AS, [leaf_swap]))
print("meets the skeleton:", meets_x(AS, [leaf_swap]))

E4 = ActionStructure(dec_E4())
print("|Aut(E4)| =", E4.G.order)

# the formula for the function part against the pointwise stabilizer
print("FunctionPart:", function_part(E4).order, " pointwise stabilizer:", pointwise_skeleton_stabilizer(E4).order)

# only the centre has rep-pairs here, so the extracted skeleton is one point
ex = extract_skeleton(E4)
print("extracted points:", ex.points, " isomorphic to skeleton:", ex.isomorphic)

res = classify_report(E4, "above", "c")
print("Above(c):", [G.order for G in res.groups], res.counts)
target = automorphism_group(tree_V().base)
print("target Aut(V) has order", target.order)
