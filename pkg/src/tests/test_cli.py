import json

from main import main, to_csv


def run(capsys, *argv):
    code = main(list(argv) + ["--no-cache"])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohit(capsys):
    code, out, _ = run(capsys, "cohit", "--h", "1", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 1
    assert payload["admissibles"] == [[3]]


def test_cohit_weight(capsys):
    code, out, _ = run(capsys, "cohit", "--h", "2", "--n", "3", "--weight", "1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 3
    assert payload["dim_zero"] == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--h", "2", "--degrees", "1-4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,1,2,3,4", "dim,2,1,3,2"]


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--h", "6", "--n", "2", "--group", "s")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"] == "S"
    assert payload["dim"] == 1


def test_kameko(capsys):
    code, out, _ = run(capsys, "kameko", "--h", "3", "--n", "5", "--kernel")
    assert code == 0
    payload = json.loads(out)
    assert payload["kernel_dim"] == 0
    assert payload["kernel"] == []
    code, out, _ = run(capsys, "kameko", "--h", "3", "--n", "5", "--times", "0")
    assert json.loads(out)["rows"] == 3


def test_ext(capsys):
    code, out, _ = run(capsys, "ext", "--s", "2", "--t", "2")
    assert code == 0
    assert json.loads(out)["dim"] == 1


def test_annihilated(capsys, tmp_path):
    code, out, _ = run(capsys, "annihilated", "--h", "2", "--n", "4")
    assert code == 0
    assert json.loads(out)["dim"] == 2
    element = tmp_path / "xi.json"
    element.write_text(json.dumps({"h": 1, "n": 2, "terms": [[2]]}))
    code, out, _ = run(capsys, "annihilated", "--element", str(element))
    assert json.loads(out)["annihilated"] is False


def test_transfer(capsys, tmp_path):
    element = tmp_path / "xi.json"
    element.write_text(json.dumps({"h": 2, "n": 2, "terms": [[1, 1]]}))
    code, out, _ = run(capsys, "transfer", "--element", str(element))
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "nonzero"
    assert payload["element"] == "l1 l1"
    code, _, err = run(capsys, "transfer", "--element", str(element), "--h", "3")
    assert code == 2
    assert err.startswith("error:")


def test_errors_exit_two(capsys, tmp_path):
    assert run(capsys, "annihilated")[0] == 2
    assert run(capsys, "transfer", "--element", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "kameko", "--h", "3", "--n", "4")[0] == 2


def test_reproduce(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"claims": []}))
    assert run(capsys, "reproduce", "--manifest", str(empty))[0] == 0

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"claims": [{"name": "x", "kind": "volume", "expected": 1}]}))
    assert run(capsys, "reproduce", "--manifest", str(unknown))[0] == 2

    claims = tmp_path / "claims.json"
    claims.write_text(json.dumps({"claims": [
        {"name": "ok", "kind": "dimension", "params": {"h": 1, "n": 3}, "expected": 1},
        {"name": "off", "kind": "dimension", "params": {"h": 1, "n": 3}, "expected": 5},
    ]}))
    code, out, _ = run(capsys, "reproduce", "--manifest", str(claims), "--json-report")
    assert code == 1
    report = json.loads(out)
    assert [result["passed"] for result in report["results"]] == [True, False]
    code, out, _ = run(capsys, "reproduce", "--manifest", str(claims))
    assert "1 passed, 1 failed" in out


def test_to_csv_scalars():
    assert to_csv({"h": 2, "n": 3, "dim": 3, "admissibles": []}) == "dim,h,n\n3,2,3\n"
