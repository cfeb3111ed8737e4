"""Command line behavior: exit codes, report content, determinism."""

import json
import subprocess
import sys

import pytest

from jmoduli.cli import main

CUBIC = "x0^3 + x1^3 + x2^3"
QUARTIC = "x0^4 + x1^4 + x2^4 + x3^4"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--json"])
    return code, json.loads(out), err


def test_check_pass(capsys):
    code, report, _ = run_json(capsys, ["check", CUBIC])
    assert code == 0
    assert report["command"] == "check"
    assert report["input"] == {"f": CUBIC, "g": None, "nvars": 3, "nu": 3}
    assert report["result"]["pass"] is True
    assert report["result"]["nonsingular"] is True
    assert set(report) == {"command", "input", "result", "timing_ms", "version"}


def test_check_not_calabi_yau(capsys):
    code, report, _ = run_json(capsys, ["check", "x0^4+x1^4+x2^4", "--nvars", "3"])
    assert code == 1
    assert report["result"]["calabi_yau"] is False
    assert report["result"]["nonsingular"] is True


def test_check_singular(capsys):
    code, report, _ = run_json(capsys, ["check", "x0^3+x1^3", "--nvars", "3"])
    assert code == 1
    assert report["result"]["nonsingular"] is False


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, ["check", "x0^3 + zq"])
    assert code == 2
    assert "parse error" in err


def test_budget_exit_code(capsys):
    code, out, err = run(capsys, ["moduli", QUARTIC, "--max-pairs", "2"])
    assert code == 3
    assert "budget" in err


def test_moduli_cubic(capsys):
    code, report, _ = run_json(capsys, ["moduli", CUBIC])
    assert code == 0
    r = report["result"]
    assert r["hilbert"] == [1, 3, 3, 1]
    assert r["r_dims"] == [1, 1]
    assert r["dim_extended"] == 4
    assert r["grading"] == [0, 2, 1, 1]
    assert r["primitive_bases"] == [[0, ["1"]], [1, ["x0*x1*x2"]]]


def test_moduli_quartic(capsys):
    code, report, _ = run_json(capsys, ["moduli", QUARTIC])
    assert code == 0
    r = report["result"]
    assert r["r_dims"] == [1, 19, 1]
    assert r["dim_extended"] == 24


def test_deform_hesse(capsys):
    code, report, err = run_json(capsys, ["deform", CUBIC, "x0*x1*x2"])
    assert code == 0
    r = report["result"]
    assert r["dim_extended"] == 4
    assert r["dim_extended_deformed"] == 4
    assert r["equal"] is True
    assert "warning" not in r
    assert err == ""


def test_deform_negative_control(capsys):
    # an exact direction: dimensions differ, verdict false, but the run
    # itself succeeds and says why
    code, report, err = run_json(capsys, ["deform", CUBIC, "x0^6"])
    assert code == 0
    r = report["result"]
    assert r["dim_extended"] == 4
    assert r["dim_extended_deformed"] == 8
    assert r["equal"] is False
    assert "warning" in r
    assert "warning" in err


def test_deform_empty_g_is_zero(capsys):
    code, report, _ = run_json(capsys, ["deform", CUBIC, ""])
    assert code == 0
    assert report["input"]["g"] == "0"
    assert report["result"]["equal"] is True


def test_deform_singular_deformation(capsys):
    code, out, err = run(capsys, ["deform", CUBIC, "--", "-1*x0^3"])
    assert code == 1
    assert "singular" in err


def test_deform_bad_weight(capsys):
    code, out, err = run(capsys, ["deform", CUBIC, "x0^2"])
    assert code == 2
    assert "not divisible" in err


def test_deform_g_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("x0*x1*x2\n")
    code, report, _ = run_json(capsys, ["deform", CUBIC, "--g-file", str(path)])
    assert code == 0
    assert report["input"]["g"] == "x0*x1*x2"
    code, out, err = run(capsys,
                         ["deform", CUBIC, "x0^6", "--g-file", str(path)])
    assert code == 2


@pytest.mark.parametrize("degree,weight,h_dim", [(1, -3, 1), (-1, 0, 0), (1, 0, 1)])
def test_dgla_spot_values(capsys, degree, weight, h_dim):
    code, report, _ = run_json(
        capsys, ["dgla", CUBIC, "--degree", str(degree), f"--weight={weight}"])
    assert code == 0
    r = report["result"]
    assert r["h_dim"] == h_dim
    if degree == 1:
        assert r["crosscheck_pass"] is True


def test_dgla_piece_dims(capsys):
    code, report, _ = run_json(
        capsys, ["dgla", CUBIC, "--degree", "1", "--weight=-3"])
    assert report["result"]["dim_piece"] == 1
    assert report["result"]["dim_ker"] == 1
    assert report["result"]["dim_im_in"] == 0


def test_json_determinism(capsys):
    argv = ["moduli", CUBIC, "--json"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    strip = lambda text: "\n".join(
        line for line in text.splitlines() if "timing_ms" not in line)
    assert code1 == code2 == 0
    assert strip(out1) == strip(out2)


def test_inhomogeneous_f_is_a_hypothesis_failure(capsys):
    code, out, err = run(capsys, ["moduli", "x0^3 + x1^2", "--nvars", "3"])
    assert code == 1
    assert "homogeneous" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jmoduli.cli", "check", CUBIC, "--json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["pass"] is True


def test_human_output_mentions_dimensions(capsys):
    code, out, _ = run(capsys, ["moduli", CUBIC])
    assert code == 0
    assert "dim R~:       4" in out
    code, out, _ = run(capsys, ["dgla", CUBIC, "--degree", "1", "--weight=-3"])
    assert "hilbert check: pass" in out
