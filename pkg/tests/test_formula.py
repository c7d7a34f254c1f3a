import json

import pytest

from cfpo.formula import (ELEM, FALSE, LIBRARY, NAMED, SUBGROUP, TRUE, And, Atom, Eq, Implies, Not, Quant, Var,
                          atom, atoms_of, conj, eq, exists, forall, free_vars, from_json, in_equation, instantiate,
                          named, pretty, simplify, substitute, to_json)


def test_constructors():
    F = forall("f g", Implies(atom("Disj", "f", "g"), atom("Disj", "g", "f")))
    assert isinstance(F, Quant) and F.vars == (("f", "tuple"), ("g", "tuple"))
    assert free_vars(F) == frozenset()
    assert free_vars(atom("Disj", "f", conj("g", "phi"))) == {"f", "g", "phi"}


def test_simplify_constants():
    assert simplify(eq("x", "x")) == TRUE
    assert simplify(And((TRUE, atom("Indec", "f")))) == atom("Indec", "f")
    assert simplify(Not(Not(atom("Indec", "f")))) == atom("Indec", "f")
    assert simplify(Implies(FALSE, atom("Indec", "f"))) == TRUE
    assert simplify(forall("g", atom("Indec", "f"))) == atom("Indec", "f")


def test_one_point_rule():
    F = forall("g", Implies(eq("g", conj("f", "phi")), atom("Indec", "g")), sort="tuple")
    assert simplify(F) == atom("Indec", conj("f", "phi"))
    G = exists("g", And((eq(conj("f", "phi"), "g"), atom("Indec", "g"))))
    assert simplify(G) == atom("Indec", conj("f", "phi"))


def test_substitute_avoids_bound():
    F = exists("g", atom("Disj", "f", "g"))
    assert substitute(F, "g", Var("h")) == F
    assert substitute(F, "f", Var("h")) == exists("g", atom("Disj", "h", "g"))


def test_in_equation():
    _, body = named("FunctionPart")
    assert not in_equation(body, "f0")  # bound there
    assert in_equation(body.body, "f0")
    _, body = named("MeetsX")
    assert not in_equation(body, "f")


def test_json_round_trip_library():
    for name, (_, body) in LIBRARY.items():
        text = json.dumps(to_json(body))
        assert from_json(json.loads(text)) == body, name


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        from_json({"forall": [["x", "colour"]], "body": True})
    with pytest.raises(ValueError):
        from_json([1, 2])


def test_named():
    assert set(NAMED) <= set(LIBRARY)
    assert instantiate("MeetsX", "f") == Atom("MeetsX", (Var("f"),))
    with pytest.raises(ValueError):
        instantiate("MeetsX", "f", "g")
    with pytest.raises(KeyError):
        named("Nope")
    params, _ = named("Above")
    assert params[0] == ("A", SUBGROUP)
    assert atoms_of(named("Above")[1]) >= {"AboveTemp3", "Between", "SubLt"}


def test_pretty():
    F = forall([("phi", ELEM)], eq("phi", "phi"))
    assert pretty(F) == "A phi:elem. phi = phi"
    assert pretty(Eq(conj("f", "phi"), Var("g"))) == "f^phi = g"
