import json
import subprocess
import sys

import pytest

from kronnil.cli import main
from kronnil.conventions import DEFAULT


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_kp_list(capsys):
    status, out, _ = run(capsys, "kp", "list", "--beta", "2,4")
    assert status == 0
    assert out.splitlines() == ["(b2, b0)\tlambda=2,0", "(b1, b1)\tlambda=1,1"]


def test_kp_poset(capsys):
    status, out, _ = run(capsys, "kp", "poset", "--beta", "2,5")
    assert status == 0
    assert "(b1, b1, b0) <= (b2, b0, b0)\tdominance=yes" in out


def test_delta(capsys):
    assert run(capsys, "delta", "--lambda", "1,0,0")[:2] == (0, "2\n")


def test_aj_series(capsys):
    status, out, _ = run(capsys, "aj", "--r", "2", "--lambda", "0,0", "--truncate", "8")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "A(0,0) = [(1 + q^2)*chi[0, 0]] / D_2"
    assert lines[1] == "q^0: 1"
    assert lines[2] == "q^2: x1^1*x2^-1 + 1 + x1^-1*x2^1"
    assert len(lines) == 6


def test_aj_json(capsys):
    status, out, _ = run(capsys, "aj", "--r", "2", "--lambda", "1,0", "--json")
    assert status == 0
    assert json.loads(out)["num"] == "x1 + x2"


def test_shuffle(capsys, tmp_path):
    status, out, _ = run(capsys, "shuffle", "expand", "--expr", "E0*E1", "--cache-dir", str(tmp_path))
    assert status == 0
    assert out == "(b1, b0)\tq^-2\n"
    status, out, _ = run(capsys, "shuffle", "rootvec", "--n", "1")
    assert status == 0
    assert json.loads(out)


def test_kronecker(capsys):
    # P0 + P0 + P2 degenerates from the more generic P0 + P1 + P1
    n = json.dumps({"p": [2, 0, 1], "i": [], "regular": {}})
    m = json.dumps({"p": [1, 2], "i": [], "regular": {}})
    assert run(capsys, "kronecker", "degen", "--N", n, "--M", m)[:2] == (0, "true\n")
    assert run(capsys, "kronecker", "degen", "--N", m, "--M", n)[:2] == (0, "false\n")
    assert run(capsys, "kronecker", "degen", "--N", n)[0] == 2
    other = json.dumps({"p": [1, 1], "i": [], "regular": {}})
    assert run(capsys, "kronecker", "degen", "--N", other, "--M", m)[0] == 2
    status, out, _ = run(capsys, "kronecker", "degen", "--beta", "2,5")
    assert "Y(b2, b0, b0) in closure of Y(b1, b1, b0)" in out.splitlines()


def test_verify(capsys, tmp_path):
    status, out, _ = run(capsys, "verify", "all", "--max-rank", "2", "--cache-dir", str(tmp_path))
    assert status == 0
    report = json.loads(out)
    assert report["summary"]["failed"] == 0
    assert report["convention_hash"] == DEFAULT.hash


def test_report_to_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_height": 5, "checks": ["orders"]}))
    out_path = tmp_path / "out.json"
    status, out, _ = run(capsys, "report", "--config", str(cfg), "--output", str(out_path))
    assert status == 0
    assert "report written" in out
    assert json.loads(out_path.read_text())["summary"]["cases"] == 9


@pytest.mark.parametrize("argv", [
    ["verify", "bogus"],
    ["verify", "all", "--max-rank", "0"],
    ["kp", "list", "--beta", "3,1"],
    ["kp", "list", "--beta", "x"],
    ["aj", "--r", "3", "--lambda", "0,0"],
    ["delta", "--lambda", "0,1"],
    ["shuffle", "expand", "--expr", "F2"],
    ["report", "--config", "/nonexistent/cfg.json"],
    [],
])
def test_usage_errors(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2
    assert err


def test_version(capsys):
    status, out, _ = run(capsys, "--version")
    assert status == 0
    assert DEFAULT.hash in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kronnil", "delta", "--lambda", "2,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1\n"
