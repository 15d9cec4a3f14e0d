import json

from sdnb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_yes_exit_code(capsys):
    code, out, _ = run(capsys, "decide", "--group", "C8", "--family", "cyclic-quadratic", "--z", "3")
    assert code == 0
    assert "verdict: yes" in out


def test_decide_no_exit_code_and_json(capsys):
    code, out, _ = run(
        capsys, "decide", "--group", "D4", "--family", "d4-quadratic", "--z", "3",
        "--format", "json",
    )
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "no"
    assert any(not row["passed"] for row in data["certificate"])
    for row in data["certificate"]:
        assert set(row) == {"condition", "factor", "place", "passed", "detail"}


def test_decide_unknown_exit_code(capsys):
    code, out, _ = run(
        capsys, "decide", "--group", "A4", "--family", "a4-quartic", "--poly", "12,8,0,0,1",
        "--format", "json",
    )
    assert code == 2
    assert json.loads(out)["verdict"] == "unknown"


def test_decide_local_flag(capsys):
    code, out, _ = run(
        capsys, "decide", "--group", "C4", "--family", "cyclic-quadratic", "--z", "3",
        "--at", "3",
    )
    assert code == 1


def test_decide_spec_file(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"group": "C8", "family": "cyclic-quadratic", "z": "3"}))
    code, out, _ = run(capsys, "decide", "--spec", str(path))
    assert code == 0


def test_invariants(capsys):
    code, out, _ = run(
        capsys, "invariants", "--group", "C8", "--family", "cyclic-quadratic", "--z", "3",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["h1"] is True
    assert data["signature"] == [2, 0]
    top = [e for e in data["entries"] if e["factor"] == "chi8"]
    assert top and top[0]["class"] == [2, 3]


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--", "-1", "-1", "real")
    assert code == 0 and out.strip() == "-1"
    code, out, _ = run(capsys, "hilbert", "2", "3", "3")
    assert code == 0 and out.strip() == "-1"


def test_form_diag(capsys):
    code, out, _ = run(capsys, "form", "--diag", "1,1,-3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["det_class"] == -3
    assert data["isotropic_over_Q"] is False
    assert "anisotropic_at" in data


def test_form_gram_and_witness(capsys):
    code, out, _ = run(capsys, "form", "--gram", "0,1;1,0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["signature"] == [1, 1]

    code, out, _ = run(capsys, "form", "--diag", "1,1,-2", "--format", "json")
    data = json.loads(out)
    assert data["witness"] is not None

    code, out, _ = run(capsys, "form", "--diag", "1,1", "--represents", "5", "--format", "json")
    data = json.loads(out)
    assert data["represents"]["result"] is True


def test_factors(capsys):
    code, out, _ = run(capsys, "factors", "--group", "C8", "--format", "json")
    assert code == 0
    table = json.loads(out)
    assert [fd["id"] for fd in table] == ["triv", "chi2", "chi4", "chi8"]
    assert table[3]["e"] == {"real-cyclotomic": 8}


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "--poly", "2,0,-4,0,1", "--format", "json")
    assert code == 0
    assert json.loads(out)["trivial"] is True


def test_usage_error(capsys):
    code, _, _ = run(capsys, "decide", "--badflag")
    assert code == 64
    code, _, _ = run(capsys)
    assert code == 64


def test_data_error(capsys):
    code, _, err = run(capsys, "decide", "--group", "C8", "--family", "cyclic-quadratic", "--z", "0")
    assert code == 65
    assert json.loads(err)["error"] == "bad-input"
    code, _, _ = run(capsys, "form", "--diag", "1,0")
    assert code == 65
    code, _, _ = run(capsys, "form")
    assert code == 65


GOLDEN_CLI = [
    ({"group": "C8", "family": "cyclic-quadratic", "z": "3"}, 0),
    ({"group": "C8", "family": "cyclic-quadratic", "z": "-1"}, 1),
    ({"group": "C8", "family": "cyclic-quartic", "a": "2", "b": "1", "c": "1", "eps": "2"}, 0),
    ({"group": "C8", "family": "cyclic-quartic", "a": "-2", "b": "1", "c": "1", "eps": "2"}, 1),
    ({"group": "D4", "family": "d4-quadratic", "z": "3"}, 1),
    ({"group": "D4", "family": "d4-quadratic", "z": "5"}, 0),
    ({"group": "A4", "family": "a4-quartic", "poly": [12, 8, 0, 0, 1]}, 2),
]


def test_json_roundtrip_and_exit_codes_on_golden_suite(tmp_path, capsys):
    for i, (spec, want) in enumerate(GOLDEN_CLI):
        path = tmp_path / f"spec{i}.json"
        path.write_text(json.dumps(spec))
        code, out, _ = run(capsys, "decide", "--spec", str(path), "--format", "json")
        assert code == want, spec
        data = json.loads(out)
        assert data["verdict"] == {0: "yes", 1: "no", 2: "unknown"}[want]
        assert isinstance(data["certificate"], list) and data["certificate"]
        for row in data["certificate"]:
            assert set(row) == {"condition", "factor", "place", "passed", "detail"}
            assert isinstance(row["passed"], bool)
