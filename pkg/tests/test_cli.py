import pathlib
import subprocess
import sys

import pytest

from ghzw import cli

STATES = pathlib.Path(__file__).resolve().parent.parent / "states"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_ghz(capsys):
    code, out, _ = run(capsys, "classify", str(STATES / "ghz3.json"))
    assert code == 0 and out.splitlines()[0] == "GHZ"
    assert "q: 1" in out


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", str(STATES / "w3.json"))
    assert code == 0 and "q: 0" in out and "grad_nonzero:" in out


def test_dims_segre(capsys):
    code, out, _ = run(capsys, "dims", "--space", "segre-2-2-2", "--seed", "1")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[0] == "segre-2-2-2" and row[4:7] == ["7", "6", "Case1"]


def test_dims_formats(capsys):
    code, out, _ = run(capsys, "dims", "--space", "v2-p2", "--format", "csv")
    assert out == "name,label,n,ambient,sigma,tau,case\nv2-p2,v2(P2),2,5,4,4,Case2\n"
    code, out, _ = run(capsys, "dims", "--space", "v2-p2", "--format", "md")
    assert out.startswith("| name |") and "| v2-p2 |" in out


def test_sample_pipe_classify():
    sample = subprocess.run([sys.executable, "-m", "ghzw", "sample", "--space", "fts-octonion",
                             "--class", "w", "--seed", "7"], capture_output=True, check=True)
    res = subprocess.run([sys.executable, "-m", "ghzw", "classify", "-"], input=sample.stdout,
                         capture_output=True)
    assert res.returncode == 0 and res.stdout.decode().splitlines()[0] == "W"


def test_determinism(capsys):
    outs = {run(capsys, "sample", "--space", "wedge3", "--class", "biseparable", "--seed", "3")[1]
            for _ in range(2)}
    assert len(outs) == 1
    a = run(capsys, "dims", "--all", "--seed", "4")[1]
    b = run(capsys, "dims", "--all", "--seed", "4")[1]
    assert a == b


def test_tables_pass(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 14
    code, out, _ = run(capsys, "table2", "--format", "csv")
    assert code == 0 and "FAIL" not in out
    assert out.count("corrected, see notes") == 4 and "INFO" in out


def test_e6_check(capsys):
    code, out, _ = run(capsys, "e6-check", "--seed", "2")
    assert code == 0 and out.count("PASS") == 3


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "FAIL" not in out


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["dims", "--trials", "0"])
    assert err.value.code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"space": {"family": "fts", "algebra": "Deg0", "basis": "qubits"}, "coefficients": []}')
    code, _, err_text = run(capsys, "classify", str(bad))
    assert code == 2 and "needs 8 coefficients" in err_text
    code, _, err_text = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, err_text = run(capsys, "sample", "--space", "nowhere", "--class", "w")
    assert code == 2 and "unknown space" in err_text
    code, _, err_text = run(capsys, "sample", "--space", "qubits", "--class", "entangled")
    assert code == 2
    code, _, _ = run(capsys, "dims", "--space", "nowhere")
    assert code == 2
