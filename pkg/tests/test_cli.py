import subprocess
import sys

import numpy as np
import pytest

from induced_uncertainty import quantum as q
from induced_uncertainty.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["--id", "shannon", "--dist", "0.75,0.25"], "0.811278124459"),
    (["--id", "absolute", "--dist", "0.5,0.5"], "0.5"),
    (["--id", "renyi", "--alpha", "2", "--dist", "1,0"], "0"),
    (["--id", "js", "--dist", "0.5,0.5"], "0.622556248918"),
    (["--id", "hellinger", "--dist", "0.75,0.25", "--generic"], "0.517638090205"),
    (["--id", "down-renyi", "--gamma", "0.5", "--dist", "0.75,0.25"], "0.899968626953"),
    (["--id", "tsallis", "--beta", "2", "--dist", "0.75,0.25"], "0.75"),
])
def test_measure(capsys, argv, expected):
    code, out, err = run(capsys, "measure", *argv)
    assert code == 0 and err == ""
    assert out == expected + "\n"


def test_measure_from_files(capsys, tmp_path):
    dist = tmp_path / "p.txt"
    dist.write_text("# two outcomes\n0.75\n0.25\n")
    code, out, _ = run(capsys, "measure", "--id", "shannon", "--dist-file", str(dist))
    assert code == 0 and out == "0.811278124459\n"
    rho = tmp_path / "rho.txt"
    q.write_density_matrix(np.diag([0.75, 0.25]), rho)
    code, out, _ = run(capsys, "measure", "--id", "hs", "--dm-file", str(rho))
    assert code == 0 and out == "0.375\n"
    code, out, _ = run(capsys, "measure", "--id", "von-neumann", "--dm-file", str(rho))
    assert out == "0.811278124459\n"
    code, out, _ = run(capsys, "measure", "--id", "gen-renyi", "--alpha", "2", "--generic",
                       "--dm-file", str(rho))
    assert float(out) == pytest.approx(-np.log2(0.625))


@pytest.mark.parametrize("argv", [
    ["measure", "--id", "renyi", "--dist", "0.5,0.5"],
    ["measure", "--id", "shannon", "--dist", "0.5,0.6"],
    ["measure", "--id", "shannon", "--dist", "a,b"],
    ["measure", "--id", "shannon"],
    ["measure", "--id", "nope", "--dist", "1"],
    ["measure", "--id", "down-tsallis", "--beta", "2", "--dist", "0.5,0.5"],
    ["measure", "--id", "bures"],
    ["measure", "--id", "shannon", "--dist-file", "/nonexistent/file"],
    ["sweep-classical", "--grid-step", "0.7"],
    ["sweep-quantum", "--grid-step", "0"],
    ["sweep-classical", "--measures", "renyi"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "everything"])
    assert exc.value.code == 2


def test_sweep_classical_csv(capsys):
    code, out, _ = run(capsys, "sweep-classical", "--normalize", "all")
    lines = out.split("\n")
    assert code == 0 and lines[0] == "p,shannon,js,absolute,hellinger"
    assert lines[-1] == "" and len(lines) == 103
    assert lines[1] == "0,0,0,0,0"
    assert lines[51] == "0.5,1,1,1,1"
    assert "\r" not in out and not any(l.endswith(",") for l in lines)


def test_sweep_quantum_csv(capsys):
    code, out, _ = run(capsys, "sweep-quantum")
    lines = out.splitlines()
    assert lines[0] == "p,bures,l1,hs,shannon"
    assert lines[-1] == "1,0,0,0,0"
    assert lines[51] == "0.5,0.517638090205,0.5,0.375,0.811278124459"


def test_sweep_is_byte_stable():
    cmd = [sys.executable, "-m", "induced_uncertainty", "sweep-quantum", "--seed", "3",
           "--normalize", "paper", "--grid-step", "0.05"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"p,bures,l1,hs,shannon\n")


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--seed", "7", "--trials", "200")
    assert code == 0 and out.splitlines()[-1].endswith("failed=0")
    code, out, _ = run(capsys, "verify", "--suite", "errata")
    assert code == 0
    assert sum(l.startswith("REPRODUCED ") for l in out.splitlines()) == 6
    code, out, _ = run(capsys, "verify", "--suite", "quantum", "--seed", "7", "--trials", "20")
    assert code == 0

    from induced_uncertainty import verify as v
    monkeypatch.setattr(v, "classical_suite",
                        lambda seed, **kw: [v.check_schur_concavity(lambda p: p[0], 3, 100, seed)])
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--max-failures", "1")
    assert code == 1
    assert out.splitlines()[-1] == "SUMMARY properties=1 failed=1"
    assert "more" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "induced_uncertainty", "measure", "--id", "renyi",
                        "--dist", "0.5,0.5"], capture_output=True, text=True)
    assert r.returncode == 2 and "alpha" in r.stderr
