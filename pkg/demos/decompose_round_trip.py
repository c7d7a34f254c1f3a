"""
Taking a decoration apart
=========================

Given an order and a candidate skeleton, classify the pieces left over and
rebuild the three ingredients.
"""

from cfpo.decompose import classify_components, decompose, suggest_candidates
from cfpo.decoration import decorate
from cfpo.fixtures import poset_A, tree_T3, tree_V

D = decorate(poset_A(), tree_V(), tree_T3())
M = D.base  # forget the provenance

for v in classify_components(M, D.skeleton)[:4]:
    print(v.kind, v.anchors, sorted(v.C))

dec = decompose(M, D.skeleton)
print("S  :", sorted(dec.S.elements))
print("T  :", sorted(dec.TL.elements), "chain", sorted(dec.TL.chain))
print("|Aut(M)| =", dec.aut_order_M, " |Aut(rebuilt)| =", dec.aut_order_dec,
      " same action:", dec.equivariant)
for note in dec.notes:
    print("note:", note)

# without a hint, try unions of orbits
print("candidates:", [sorted(A) for A in suggest_candidates(M)][:3])
