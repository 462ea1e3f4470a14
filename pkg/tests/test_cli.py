import json

import pytest

from frobgraph.catalog import write_catalogue
from frobgraph.cli import run
from frobgraph.frobenius import algebra_from_json, builtin_Rcd, check_relations
from frobgraph.graph import graph_from_json, validate


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--format", "json")
    return code, (json.loads(out) if out.strip() else None), err


def test_check_R11_passes(capsys):
    code, out, _ = call(capsys, "check", "--algebra", "R1,1", "--flavor", "commutative")
    assert code == 0
    for label in ("(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vi')"):
        assert any(line.startswith(label + " ") and line.endswith("pass") for line in out.splitlines())


def test_check_json_items(capsys):
    code, data, _ = call_json(capsys, "check", "--c", "2", "--d", "-1", "--snake")
    assert code == 0 and data["ok"] and data["snake"] == "pass"
    assert [it["status"] for it in data["items"]] == ["pass"] * 7


def test_check_failure_exit_code(capsys, tmp_path):
    f = builtin_Rcd(1, 1)
    bad = f.with_(mu=2 * f.mu)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad.to_json()))
    code, data, _ = call_json(capsys, "check", "--algebra", str(path))
    assert code == 1
    assert not data["ok"]
    assert {it["item"] for it in data["items"] if it["status"] == "fail"} == {"(ii)"}


def test_sign_compose_associativity(capsys, tmp_path):
    write_catalogue(tmp_path)
    multi = str(tmp_path / "multi.json")
    code, out, _ = call(capsys, "sign", "compose", "--left", multi, "--right", multi, "--port", "1")
    assert code == 0 and out.strip() == "-1"


def test_sign_compose_unit(capsys):
    code, data, _ = call_json(capsys, "sign", "compose", "--left", "multi", "--right", "unit", "--port", "1")
    assert data["sign"] == -1


def test_validate_fixed_point(capsys, tmp_path):
    write_catalogue(tmp_path)
    obj = json.loads((tmp_path / "multi.json").read_text())
    h = obj["sigma"][0][0]
    obj["sigma"][0] = [h, h]
    del obj["edges"]
    path = tmp_path / "bad_sigma.json"
    path.write_text(json.dumps(obj))
    code, _, err = call(capsys, "validate", str(path))
    assert code == 2
    assert "involution has fixed point" in err


def test_validate_ok(capsys):
    code, data, _ = call_json(capsys, "validate", "torus")
    assert code == 0 and data["valid"] and not data["forest"]


def test_usage_error(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "check", "--flavor", "weird")[0] == 2
    assert call(capsys, "evaluate", "no_such_graph", "--c", "1", "--d", "1")[0] == 2


def test_compose_round_trip(capsys, tmp_path):
    code, data, _ = call_json(capsys, "compose", "--left", "multi", "--right", "multi", "--port", "2")
    assert code == 0
    g = graph_from_json(data)
    assert not validate(g) and (len(g.legs_in), len(g.legs_out)) == (3, 1)
    path = tmp_path / "composite.json"
    path.write_text(json.dumps(data))
    code, dec, _ = call_json(capsys, "decompose", str(path))
    assert code == 0 and dec["counts"]["Mu"] == 2


def test_collapse(capsys):
    code, data, _ = call_json(capsys, "collapse", "path", "--edge", "e1")
    g = graph_from_json(data)
    assert code == 0 and len(g.edges) == 2 and "e1" not in g.edges
    assert call(capsys, "collapse", "multi", "--edge", "e0")[0] == 2


def test_orbit(capsys):
    assert call(capsys, "orbit", "handle", "--c", "0", "--d", "1")[1].strip() == "TwoTorsion"
    assert call(capsys, "orbit", "multi", "--c", "0", "--d", "1")[1].strip() == "FreeGenerator"


def test_decompose_deterministic(capsys):
    a = call(capsys, "decompose", "torus", "--seed", "3")[1]
    b = call(capsys, "decompose", "torus", "--seed", "3")[1]
    assert a == b and "∘" in a


def test_evaluate_multi(capsys):
    code, data, _ = call_json(capsys, "evaluate", "multi", "--algebra", "R1,1")
    from frobgraph.grmod import map_from_json

    assert code == 0 and map_from_json(data["map"]) == builtin_Rcd(1, 1).mu


def test_evaluate_seed_independent(capsys):
    outs = {json.dumps(call_json(capsys, "evaluate", "handle", "--algebra", "S2", "--seed", s)[1]["map"])
            for s in ("0", "1", "2")}
    assert len(outs) == 1


def test_suspend_and_tensor_round_trip(capsys, tmp_path):
    code, data, _ = call_json(capsys, "suspend", "--c", "1", "--d", "1", "--times", "2")
    f = algebra_from_json(data)
    assert (f.c, f.d) == (-1, 3) and check_relations(f).ok
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(data))
    assert call(capsys, "check", "--algebra", str(path))[0] == 0
    code, data, _ = call_json(capsys, "tensor", "S1", "S1")
    t = algebra_from_json(data)
    assert t.A.rank == 4 and check_relations(t).ok
    assert call(capsys, "tensor", "S1", "S2")[0] == 2


def test_sign_automorphism(capsys):
    code, data, _ = call_json(capsys, "sign", "automorphism", "double_edge", "--c", "1", "--d", "0")
    assert code == 0 and {a["sign"] for a in data["actions"]} <= {1, -1}


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "o.json"
    assert call(capsys, "examples", "list", "--format", "json", "--out", str(target))[0] == 0
    assert "torus" in json.loads(target.read_text())["graphs"]


def test_catalogue_env(capsys, tmp_path, monkeypatch):
    write_catalogue(tmp_path)
    (tmp_path / "only_here.json").write_text((tmp_path / "multi.json").read_text())
    monkeypatch.setenv("FROBGRAPH_CATALOG", str(tmp_path))
    code, data, _ = call_json(capsys, "validate", "only_here")
    assert code == 0 and data["in"] == 2


@pytest.mark.parametrize("name", ["R1,1", "S2", "T2", "CP2", "unit"])
def test_examples_algebra(capsys, name):
    code, data, _ = call_json(capsys, "examples", "algebra", name)
    assert code == 0 and check_relations(algebra_from_json(data)).ok
