import json

import pytest

from novikov_forge.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def show(capsys, tmp_path, family, **params):
    argv = ["catalog", "show", family] + [f"--param={k}={v}" for k, v in params.items()]
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_PASS
    path = tmp_path / f"{family.replace(':', '_')}.json"
    path.write_text(out)
    return path, json.loads(out)


def test_show_then_check(capsys, tmp_path):
    path, doc = show(capsys, tmp_path, "A3_2", lam=1, eps=1)
    assert doc["schema_version"] == 1 and doc["space"] == ["even"] * 3
    assert doc["metadata"]["family"] == "A3_2"
    code, out, _ = run(capsys, "check", path)
    assert code == EXIT_PASS and "all checks pass" in out
    code, out, _ = run(capsys, "check", path, "--json", "--timings")
    rep = json.loads(out)
    assert rep["pass"] and len(rep["input_digest"]) == 64
    assert {c["check"] for c in rep["checks"]} == {"suite", "vanishing", "star", "flat"}


def test_check_selected_and_unknown_checks(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A4_14", a=1, alpha=1)
    code, _, _ = run(capsys, "check", path, "--checks", "phi,dual-rep,adjoint-rep,LR")
    assert code == EXIT_PASS
    code, _, err = run(capsys, "check", path, "--checks", "nope")
    assert code == EXIT_USAGE and "error: ParseError" in err


def test_mutated_document_fails_with_named_identity(capsys, tmp_path):
    path, doc = show(capsys, tmp_path, "A3_2", lam=1, eps=1)
    doc["product"].append([0, 0, 1, "1"])
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", path, "--json")
    rep = json.loads(out)
    assert code == EXIT_FAIL and not rep["pass"]
    assert any(not c["pass"] and c.get("failed_identity") for c in rep["checks"])


@pytest.mark.parametrize(
    "content, where",
    [
        ("{not json", "line"),
        ('{"schema_version": 1, "space": ["even"], "product": [], "gram": [[0.5]], "form_parity": "even"}', "gram"),
        ('{"schema_version": 1, "space": ["up"], "product": [], "gram": [["1"]], "form_parity": "even"}', "space"),
    ],
)
def test_malformed_documents_exit_2(capsys, tmp_path, content, where):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, err = run(capsys, "check", path, "--json")
    assert code == EXIT_USAGE and "error: ParseError" in err
    payload = json.loads(out)
    assert payload["error"] == "ParseError" and where in (payload["message"] + payload.get("where", ""))


def test_unknown_family_and_bad_params(capsys):
    assert run(capsys, "catalog", "show", "A9_9")[0] == EXIT_USAGE
    assert run(capsys, "catalog", "show", "A2_2", "--param", "alpha=0")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE


def test_levi_civita_round_trip_is_byte_identical(capsys, tmp_path):
    path, doc = show(capsys, tmp_path, "A3_5", lam=1)
    # bracket [x, y] = x•y - y•x, written out from the even product table
    n = len(doc["space"])
    table = {}
    for i, j, k, x in doc["product"]:
        table[(i, j, k)] = table.get((i, j, k), 0) + int(x)
        table[(j, i, k)] = table.get((j, i, k), 0) - int(x)
    bracket = [[i, j, k, str(x)] for (i, j, k), x in sorted(table.items()) if x]
    lie = dict(doc, product=bracket)
    lie.pop("metadata")
    lie_path = tmp_path / "lie.json"
    lie_path.write_text(json.dumps(lie))
    code, out, _ = run(capsys, "levi-civita", lie_path)
    expected = dict(doc)
    expected.pop("metadata")
    assert code == EXIT_PASS and n == 3
    assert out == json.dumps(expected, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_levi_civita_refuses_non_lie(capsys, tmp_path):
    doc = {
        "schema_version": 1,
        "space": ["even"] * 3,
        "product": [[0, 1, 0, "1"], [1, 0, 0, "-1"], [1, 2, 1, "1"], [2, 1, 1, "-1"]],
        "gram": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        "form_parity": "even",
    }
    path = tmp_path / "nl.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "levi-civita", path)
    assert code == EXIT_FAIL and "NotLie" in err


def test_milnor_exit_codes(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_2", lam=1, eps=1)
    code, out, _ = run(capsys, "milnor", path, "--json")
    assert code == EXIT_PASS and json.loads(out)["milnor"] is True
    path, _ = show(capsys, tmp_path, "A3_5", lam=1)
    code, out, _ = run(capsys, "milnor", path, "--json")
    rep = json.loads(out)
    assert code == EXIT_FAIL and rep["milnor"] is False and rep["witness"] == ["0", "0", "1"]


def test_split_then_extend_round_trip(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_5", lam=1)
    base, data = tmp_path / "base.json", tmp_path / "data.json"
    code, out, _ = run(capsys, "split", path, "--base-out", base, "--data-out", data)
    assert code == EXIT_PASS
    split = json.loads(out)
    assert split["data"]["kind"] == "even_ext_even_form"
    code, out, _ = run(capsys, "extend", base, data)
    assert code == EXIT_PASS and json.loads(out) == split["algebra"]


def test_split_of_non_degenerate_product_fails(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_2", lam=1, eps=1)
    code, _, err = run(capsys, "split", path)
    assert code == EXIT_FAIL and "NonDegenerateProduct" in err


def test_extend_rejects_inadmissible_data(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_5", lam=1)
    base, data = tmp_path / "base.json", tmp_path / "data.json"
    run(capsys, "split", path, "--base-out", base, "--data-out", data)
    d = json.loads(data.read_text())
    d["b0"] = ["0"]
    d["xi"] = [["1"]]
    data.write_text(json.dumps(d))
    code, _, err = run(capsys, "extend", base, data)
    assert code == EXIT_FAIL and "NotAdmissible" in err


def test_reduce_and_chain(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_5", lam=1)
    code, out, _ = run(capsys, "reduce", path)
    assert code == EXIT_PASS and len(json.loads(out)["space"]) == 1
    path, _ = show(capsys, tmp_path, "A4_19", alpha=1, lam=1, beta=1, a=1, b=1)
    code, out, _ = run(capsys, "reduce", path, "--chain")
    assert code == EXIT_PASS and [len(s["space"]) for s in json.loads(out)["steps"]] == [4, 2, 0]


def test_cotangent_tensor_and_star(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A2_2", alpha=1)
    for cmd, form in (("tstar", "even"), ("pi-tstar", "odd")):
        code, out, _ = run(capsys, cmd, path)
        doc = json.loads(out)
        assert code == EXIT_PASS and len(doc["space"]) == 4 and doc["form_parity"] == form
        out_path = tmp_path / f"{cmd}.json"
        out_path.write_text(out)
        assert run(capsys, "check", out_path)[0] == EXIT_PASS
    code, out, _ = run(capsys, "star", path)
    assert code == EXIT_PASS and [1, 1, 0, "1"] in json.loads(out)["product"]
    base, _ = show(capsys, tmp_path, "A3_2", lam=1, eps=1)
    h = tmp_path / "h.json"
    h.write_text(json.dumps({
        "schema_version": 1,
        "space": ["even", "even"],
        "product": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
        "gram": [["0", "1"], ["1", "0"]],
        "form_parity": "even",
    }))
    code, out, _ = run(capsys, "tensor", base, h)
    assert code == EXIT_PASS and len(json.loads(out)["space"]) == 6


def test_fingerprint_command(capsys, tmp_path):
    path, _ = show(capsys, tmp_path, "A3_4", lam=2)
    code, out, _ = run(capsys, "fingerprint", path, "--json")
    fp = json.loads(out)["fingerprint"]
    assert code == EXIT_PASS and fp["dim_rational_weights"] == 0


def test_catalog_list_and_verify(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == EXIT_PASS and len(json.loads(out)["families"]) == 33
    code, out, _ = run(capsys, "catalog", "verify", "A4_7", "--grid", "a=0,1;alpha=0,1,-1;beta=0,2;eps=1,-1", "--jobs", "1")
    assert code == EXIT_PASS and "24/24 instances pass" in out
    code, out, _ = run(capsys, "catalog", "verify", "A3_2", "--grid", '[{"lam": "1/2", "eps": -1}]', "--json", "--jobs", "1")
    assert code == EXIT_PASS and json.loads(out)["instances"] == 1
    assert run(capsys, "catalog", "verify", "A3_2", "--grid", "lam=0;eps=1", "--jobs", "1")[0] == EXIT_USAGE


def test_catalog_verify_all_seeded(capsys, monkeypatch):
    monkeypatch.setenv("NOVIKOV_FORGE_SEED", "5")
    code, out, _ = run(capsys, "catalog", "verify-all", "--jobs", "2")
    assert code == EXIT_PASS and "428/428 instances pass" in out
    monkeypatch.setenv("NOVIKOV_FORGE_SEED", "x")
    assert run(capsys, "catalog", "verify-all", "--jobs", "1")[0] == EXIT_USAGE


def test_catalog_scan(capsys):
    code, out, _ = run(capsys, "catalog", "scan", "1|1", "--odd", "--json")
    rep = json.loads(out)
    assert code == EXIT_PASS and rep["degenerate_hits"] == 4
    code, out, _ = run(capsys, "catalog", "scan", "1|0", "--grid=-1,0,1,2", "--json")
    assert code == EXIT_PASS and json.loads(out)["degenerate_hits"] == 0
    assert run(capsys, "catalog", "scan", "two")[0] == EXIT_USAGE
