import json

from cfpo import io
from cfpo.cli import main
from cfpo.dot import export_dot
from cfpo.fixtures import chain2, dec_ABB, diamond, poset_A, point_tree, tree_T3, tree_V
from cfpo.groups import automorphism_group


def write(tmp_path, name, obj):
    path = tmp_path / name
    io.write(obj, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


def test_json_round_trips(tmp_path):
    for obj in (poset_A(), tree_T3(), dec_ABB()):
        path = write(tmp_path, "x.json", obj)
        back = io.read(path)
        assert io.to_json(back) == io.to_json(obj)
    G = automorphism_group(poset_A())
    assert io.group_from_json(io.group_to_json(G)).same_elements(G)


def test_dot_is_deterministic():
    a = export_dot(dec_ABB())
    assert a == export_dot(dec_ABB())
    assert a.startswith('digraph "') and "rankdir=BT" in a
    assert '"a0" [shape=box]' in a and '"a0..c/p" [shape=diamond]' in a
    assert a.count("->") == len(dec_ABB().base.covers)


def test_check(tmp_path, capsys):
    code, out = run(capsys, "check", write(tmp_path, "A.json", poset_A()))
    assert code == 0 and out["cfpo"]
    code, out = run(capsys, "check", write(tmp_path, "d.json", diamond()))
    assert code == 1 and out["cycle"] == ["a", "b", "d", "c"]


def test_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"elements": ["x", "y"], "relation": {"kind": "covers", "pairs": [["x", "y"], ["y", "x"]]}}))
    assert main(["check", str(bad)]) == 2
    assert main(["nonsense"]) == 2
    assert main(["check", str(tmp_path / "missing.json")]) == 2


def test_decorate_and_verify(tmp_path, capsys):
    X = write(tmp_path, "X.json", chain2())
    S = write(tmp_path, "S.json", tree_V())
    T = write(tmp_path, "T.json", point_tree())
    out_path = str(tmp_path / "D.json")
    code, out = run(capsys, "decorate", "--skeleton", X, "--above", S, "--between", T, "-o", out_path)
    assert code == 0 and out["elements"] == 9
    code, out = run(capsys, "wreath-verify", "--skeleton", X, "--above", S, "--between", T)
    assert code == 0 and out["surjective"] and out["order_w"] == out["order_aut"] == 4
    code, out = run(capsys, "decompose", out_path)
    assert code == 0 and out["decomposable"] and out["autOrderM"] == 4
    code, out = run(capsys, "aut", out_path)
    assert code == 0 and out["order"] == 4


def test_orbits_and_pairs(tmp_path, capsys):
    A = write(tmp_path, "A.json", poset_A())
    code, out = run(capsys, "orbits", A)
    assert out["orbits"] == [["a0", "a1"], ["b0", "b1"], ["c"]] and not out["transitiveOnA"]
    code, out = run(capsys, "adjacent-pairs", A)
    assert out == [["a0", "c"], ["a1", "c"], ["c", "b0"], ["c", "b1"]]


def test_eval_and_budget(tmp_path, capsys):
    D = write(tmp_path, "D.json", dec_ABB())
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"forall": [["phi", "elem"]], "body": {"eq": ["phi", "phi"]}}))
    code, out = run(capsys, "eval", D, "--formula", str(f))
    assert code == 0 and out == {"value": True}
    assert main(["--quantifier-budget", "1", "eval", D, "--named", "MeetsX"]) == 3


def test_reconstruct_components_vacuous(tmp_path, capsys):
    from cfpo.fixtures import dec_E2
    D = write(tmp_path, "E2.json", dec_E2())
    code, out = run(capsys, "reconstruct-components", D, "--mode", "above", "--point", "x0")
    assert out["vacuous"] and out["orders"] == [] and out["diagnostic"]
