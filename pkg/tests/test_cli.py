"""CLI subcommands: JSON contracts, exit codes, round-trips."""

import json

import pytest

from crg import GroupParams, coxeter_element
from crg.cli import main
from crg.orbits import enumerate_factorizations
from crg.hurwitz import multiset_key
from crg.serialization import factorization_from_json, factorization_to_json


def write_factorization(tmp_path, name, f):
    path = tmp_path / name
    path.write_text(json.dumps(factorization_to_json(f)))
    return str(path)


def first_factorization(params, m):
    return enumerate_factorizations(params, coxeter_element(params), m)[0]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reflections_listing(capsys):
    code, out, _ = run(capsys, ["reflections", "--group", "2,1,2"])
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 4
    assert {doc["label"] for doc in lines} == {"T", "D1"}
    assert all(doc["v"] == 1 for doc in lines)


def test_coxeter_output(capsys):
    code, out, _ = run(capsys, ["coxeter", "--group", "2,1,3"])
    doc = json.loads(out)
    assert code == 0
    assert doc["perm"] == [2, 3, 1] and doc["weights"] == [0, 0, 1]


def test_coxnum_output(capsys):
    code, out, _ = run(capsys, ["coxnum", "--group", "2,1,2"])
    doc = json.loads(out)
    assert code == 0
    assert (doc["reflections"], doc["hyperplanes"], doc["h"]) == (4, 4, 4)


def test_act_and_roundtrip(tmp_path, capsys):
    f = first_factorization(GroupParams(2, 1, 3), 3)
    path = write_factorization(tmp_path, "f.json", f)
    code, out, _ = run(capsys, ["act", "--input", path, "--braid", "[1,-2,1]"])
    assert code == 0
    g = factorization_from_json(json.loads(out))
    assert g.product() == f.product()
    # output is accepted back as input (identity braid word)
    path2 = tmp_path / "g.json"
    path2.write_text(out)
    code, out2, _ = run(capsys, ["act", "--input", str(path2), "--braid", "[]"])
    assert code == 0 and json.loads(out2) == json.loads(out)


def test_act_invalid_letter(tmp_path, capsys):
    f = first_factorization(GroupParams(2, 1, 3), 3)
    path = write_factorization(tmp_path, "f.json", f)
    code, _, err = run(capsys, ["act", "--input", path, "--braid", "[0]"])
    assert code == 2 and "error" in err


def test_lift_command(tmp_path, capsys):
    f = first_factorization(GroupParams(2, 2, 3), 3)
    path = write_factorization(tmp_path, "f.json", f)
    code, out, _ = run(capsys, ["lift", "--input", path])
    doc = json.loads(out)
    assert code == 0 and doc["group"] == "inf,inf,3"
    lifted = factorization_from_json(doc)
    assert lifted.product() == coxeter_element(GroupParams(None, None, 3))


def test_canonical_command(tmp_path, capsys):
    f = first_factorization(GroupParams(2, 1, 2), 2)
    path = write_factorization(tmp_path, "f.json", f)
    code, out, _ = run(capsys, ["lift", "--input", path])
    assert code == 0
    lifted_path = tmp_path / "lifted.json"
    lifted_path.write_text(out)
    code, out, _ = run(capsys, ["canonical", "--input", str(lifted_path),
                                "--mod", "2", "--emit-braid"])
    doc = json.loads(out)
    assert code == 0
    assert doc["group"] == "inf,1,2"
    assert sum(doc["diag_weights"]) == 1 and doc["pair_count"] == 0
    assert isinstance(doc["braid"], list)


def test_orbit_command(tmp_path, capsys):
    f = first_factorization(GroupParams(2, 1, 2), 4)
    path = write_factorization(tmp_path, "f.json", f)
    code, out, _ = run(capsys, ["orbit", "--input", path, "--stats"])
    doc = json.loads(out)
    assert code == 0 and doc["orbit_size"] == 32
    assert len(doc["class_multiset"]) == 4


def test_certify_connected(tmp_path, capsys):
    facts = enumerate_factorizations(GroupParams(2, 1, 3),
                                     coxeter_element(GroupParams(2, 1, 3)), 3)
    p1 = write_factorization(tmp_path, "a.json", facts[0])
    p2 = write_factorization(tmp_path, "b.json", facts[-1])
    code, out, _ = run(capsys, ["certify", "--from", p1, "--to", p2])
    doc = json.loads(out)
    assert code == 0 and doc["connected"] is True
    assert isinstance(doc["braid"], list)


def test_certify_disconnected(tmp_path, capsys):
    facts = enumerate_factorizations(GroupParams(2, 1, 2),
                                     coxeter_element(GroupParams(2, 1, 2)), 4)
    blocks = {}
    for f in facts:
        blocks.setdefault(multiset_key(f), []).append(f)
    (a, b) = [fs[0] for fs in blocks.values()][:2]
    p1 = write_factorization(tmp_path, "a.json", a)
    p2 = write_factorization(tmp_path, "b.json", b)
    code, out, _ = run(capsys, ["certify", "--from", p1, "--to", p2])
    doc = json.loads(out)
    assert code == 1 and doc["connected"] is False


def test_verify_command(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, err = run(capsys, ["verify", "--group", "2,1,2", "--length", "2",
                                  "--json", str(report_path)])
    doc = json.loads(out)
    assert code == 0 and doc["match"] is True and doc["factorization_count"] == 4
    assert json.loads(report_path.read_text()) == doc
    assert "match=True" in err


def test_verify_deterministic_stdout(capsys):
    _, out1, _ = run(capsys, ["verify", "--group", "3,1,2", "--length", "3"])
    _, out2, _ = run(capsys, ["verify", "--group", "3,1,2", "--length", "3"])
    assert out1 == out2


def test_usage_errors(tmp_path, capsys):
    code, _, err = run(capsys, ["coxnum", "--group", "nope"])
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, ["act", "--input", str(bad), "--braid", "[1]"])
    assert code == 2
    code, _, _ = run(capsys, ["act", "--input", str(tmp_path / "missing.json"),
                              "--braid", "[1]"])
    assert code == 2
    assert main(["no-such-command"]) == 2


def test_budget_env_and_flag(tmp_path, capsys, monkeypatch):
    f = first_factorization(GroupParams(2, 1, 2), 4)
    path = write_factorization(tmp_path, "f.json", f)
    code, _, err = run(capsys, ["orbit", "--input", path, "--budget", "3"])
    assert code == 2 and "budget" in err
    monkeypatch.setenv("CRG_BUDGET", "3")
    code, _, err = run(capsys, ["orbit", "--input", path])
    assert code == 2 and "budget" in err
    monkeypatch.setenv("CRG_BUDGET", "not-a-number")
    code, _, err = run(capsys, ["orbit", "--input", path])
    assert code == 2


def test_serialization_rejects_non_reflection():
    doc = {"v": 1, "group": "2,1,3",
           "factors": [{"perm": [2, 3, 1], "weights": [0, 0, 1]}]}
    with pytest.raises(Exception):
        factorization_from_json(doc)
