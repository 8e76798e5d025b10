import json

import pytest

from brauerkit.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_kernel(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--r", "3", "--checks", "kernel")
    assert code == 0
    rec = json.loads(out)["results"][0]
    assert rec["status"] == "pass" and rec["details"]["dim_kernel"] == 5


def test_verify_isomorphism_range(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--r", "3", "--checks", "kernel")
    assert code == 0 and json.loads(out)["results"][0]["details"]["dim_kernel"] == 0


def test_verify_mod_p(capsys):
    code, _, _ = run(capsys, "verify", "--n", "2", "--r", "4", "--ring", "fp:7", "--checks", "kernel")
    assert code == 0


def test_small_prime_refused(capsys):
    code, _, err = run(capsys, "verify", "--n", "2", "--r", "4", "--ring", "fp:5", "--checks", "kernel")
    assert code == 2 and "too small" in err


@pytest.mark.parametrize("args", [
    ("verify", "--n", "2", "--r", "3", "--checks", "nonsense"),
    ("verify", "--n", "2", "--r", "3", "--ring", "fp:9"),
    ("verify", "--n", "2", "--r", "13", "--checks", "fft"),
    ("verify", "--n", "3", "--r", "4", "--checks", "kernel", "--max-dim", "10"),
    ("element", "G", "--n", "2"),
])
def test_configuration_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_verify_deterministic_csv(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.csv"
        code, _, _ = run(capsys, "verify", "--n", "2", "--r", "3", "--format", "csv", "--out", str(path))
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].startswith(b"check,n,r,ring,status,details")


def test_config_file_flags_win(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n": [2], "r": [3], "checks": "kernel", "format": "csv"}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_element_commands(capsys):
    code, out, _ = run(capsys, "element", "E", "--n", "1", "--r", "2")
    assert code == 0 and len(json.loads(out)["terms"]) == 2
    _, out, _ = run(capsys, "element", "F_0", "--n", "2", "--r", "3")
    assert len(json.loads(out)["terms"]) == 6
    _, a, _ = run(capsys, "element", "E_ij", "--i", "2", "--j", "2", "--n", "3", "--r", "4")
    _, b, _ = run(capsys, "element", "E", "--n", "3", "--r", "4")
    assert a == b
    code, out, _ = run(capsys, "element", "b", "--n", "1", "--r", "2", "--S", "1,2", "--Sp", "3,4")
    assert code == 0 and len(json.loads(out)["terms"]) == 2


def test_multiplicities(capsys):
    code, out, _ = run(capsys, "multiplicities", "--n", "2", "--r", "4")
    obj = json.loads(out)
    assert code == 0 and obj["checksum"] == 35 and len(obj["rows"]) == 4
    code, out, _ = run(capsys, "multiplicities", "--n", "3", "--r", "2", "--format", "csv")
    assert out.splitlines()[1:] == ["[],1,0,1", "[2],1,0,1", "\"[1,1]\",1,0,1"]
    code, out, _ = run(capsys, "multiplicities", "--n", "2", "--r", "3")
    obj = json.loads(out)
    assert [row["lambda"] for row in obj["rows"]] == [[1], [3]] and obj["checksum"] == 10
