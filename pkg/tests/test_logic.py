import itertools

import pytest

from cfpo.decoration import decorate
from cfpo.fixtures import chain2, dec_E2, dec_E3, dec_E4, point_tree, tree_V
from cfpo.formula import ELEM, SUBGROUP, Implies, atom, conj_all, eq, exists, forall
from cfpo.groups import Perm, trivial_group
from cfpo.logic import (ActionStructure, BudgetExceeded, FormulaError, Supp, _Classifier, classify_report,
                        eval_formula, extract_skeleton, function_part, indec_pd, meets_x,
                        pointwise_skeleton_stabilizer, primitive_preds, rep_pairs, rep_point, witnesses)

import oracles

_cache = {}


def structure(name):
    if name not in _cache:
        _cache[name] = ActionStructure({"E2": dec_E2, "E3": dec_E3, "E4": dec_E4}[name]())
    return _cache[name]


def swap(D, *pairs):
    m = {}
    for a, b in pairs:
        m[a], m[b] = b, a
    return Perm.from_dict(D.elements, m)


def test_gate_matches_path_oracle():
    for name in ("E2", "E3", "E4"):
        AS = structure(name)
        covers = AS.D.base.covers
        masks = {AS.supp_el[a] | AS.supp_el[b]
                 for a, b in itertools.combinations_with_replacement(range(len(AS.els)), 2)}
        for m in masks:
            supp = {AS.names[i] for i in range(AS.n) if (m >> i) & 1}
            g = AS.gate(m) if m else None
            want = oracles.gate(covers, supp) if supp else None
            assert (None if g is None else AS.names[g]) == want


def test_indec_pd_examples():
    AS = structure("E2")
    D = AS.D
    sw = swap(D, ("x0/s1", "x0/s2"))
    # the path between the two leaves runs through the copy of the root of S
    assert indec_pd(AS, (sw,)) == "x0/s0"
    assert indec_pd(AS, (Perm.identity(D.elements),)) is None
    A4 = structure("E4")
    D4 = A4.D
    both = (swap(D4, ("a0/s1", "a0/s2")), swap(D4, ("a1/s1", "a1/s2")))
    assert indec_pd(A4, both) is None


def test_primitive_preds():
    A4 = structure("E4")
    D4 = A4.D
    s0 = (swap(D4, ("a0/s1", "a0/s2")),)
    s1 = (swap(D4, ("a1/s1", "a1/s2")),)
    assert primitive_preds(A4, s0, s1) == {"disj": True, "sqsubset": False, "same_pd": False}
    assert primitive_preds(A4, s0, s0) == {"disj": False, "sqsubset": False, "same_pd": True}


def test_same_pd_inside_bundle():
    AS = structure("E4")

    def mask(*names):
        return sum(1 << AS.eidx[x] for x in names)

    at_x = mask("a0/s0", "a0..c/p")
    in_bundle = mask("a0/s1", "a0/s2")
    assert AS.names[AS.gate(at_x)] == "a0"
    assert AS.names[AS.gate(in_bundle)] == "a0/s0"
    assert AS.same_pd(at_x, in_bundle) and AS.same_pd(in_bundle, at_x)
    assert not AS.same_pd(in_bundle, mask("a1/s1", "a1/s2"))


def test_eval_basics():
    AS = structure("E2")
    assert eval_formula(AS, forall([("phi", ELEM)], eq("phi", "phi")))
    F = exists([("A", SUBGROUP)], conj_all(atom("ProperFP", "A"), forall([("phi", ELEM)], atom("Mem", "phi", "A"))))
    assert not eval_formula(AS, F)
    with pytest.raises(FormulaError):
        eval_formula(AS, atom("Indec", "f"))


def test_meets_x():
    AS = structure("E2")
    assert not meets_x(AS, (swap(AS.D, ("x0/s1", "x0/s2")),))
    assert not meets_x(AS, (Perm.identity(AS.D.elements),))
    A4 = structure("E4")
    mirror = [p for p in A4.G.elements if p("a0") == "a1" and p("b0") == "b0"]
    assert mirror and meets_x(A4, (mirror[0],))


def test_rep_point():
    A4 = structure("E4")
    G = A4.G.elements
    left = next(p for p in G if p("a0") == "a1" and p.support() <= A4.D.bundle("a0") | A4.D.bundle("a1") | {"a0", "a1"})
    right = next(p for p in G if p("b0") == "b1" and p.support() <= A4.D.bundle("b0") | A4.D.bundle("b1") | {"b0", "b1"})
    assert rep_point(A4, (left,), (right,)) == "c"
    assert rep_point(A4, (left,), (left,)) is None


def test_rep_pairs_only_at_c():
    A4 = structure("E4")
    gates = {A4.names[A4.rep_gate(m0, m1)] for m0, m1 in rep_pairs(A4)}
    assert gates == {"c"}


def test_extract_needs_rep_pairs():
    D = dec_E2()
    with pytest.raises(ValueError):
        extract_skeleton(ActionStructure(D, trivial_group(D.elements)))


def test_function_part_e2():
    AS = structure("E2")
    assert function_part(AS).order == 4
    assert pointwise_skeleton_stabilizer(AS).order == 4


def test_function_part_contains_stabilizer():
    for name in ("E3", "E4"):
        AS = structure(name)
        assert pointwise_skeleton_stabilizer(AS).is_subgroup_of(function_part(AS))


def test_witnesses():
    A4 = structure("E4")
    assert witnesses(A4, "c")
    assert witnesses(A4, "a0") == []
    with pytest.raises(ValueError):
        witnesses(A4, "a0", "b0")


def test_classify_without_witnesses():
    res = classify_report(structure("E2"), "above", "x0")
    assert res.groups == [] and "nothing to classify" in res.diagnostic


def test_budget():
    D = decorate(chain2(), tree_V(), point_tree())
    AS = ActionStructure(D, budget=5)
    with pytest.raises(BudgetExceeded) as exc:
        AS.evaluate(forall([("phi", ELEM), ("psi", ELEM)], atom("Normalizes", "phi", "psi")))
    assert exc.value.var == "psi"


def test_temp1_formula_agrees_with_classifier():
    A4 = structure("E4")
    m0, m1 = rep_pairs(A4)[0]
    C = _Classifier(A4)
    wit = [k for k in range(len(A4.els)) if A4.fixed_skeleton(k) == 1 << A4.eidx["c"]]
    direct = set(C.temp1(wit))
    F = conj_all(atom("ProperFP", "A"), forall([("phi", ELEM)], Implies(
        atom("FixesExactly", "phi", "f0", "f1"), atom("Normalizes", "phi", "A"))))
    via_formula = {m for m in A4.subgroups()
                   if A4.evaluate(F, {"A": m, "f0": Supp(m0), "f1": Supp(m1)})}
    assert direct == via_formula
    assert len(direct) == 490
