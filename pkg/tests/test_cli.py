import json
import subprocess
import sys

import pytest

import known
from chordslide import CycloNum
from chordslide.cli import run
from helpers import cmat


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_periods_latex_chord_slide(capsys):
    code, out, _ = call(capsys, "periods", "--q", "7", "--basis", "chord-slide",
                        "--construction", "direct", "--format", "latex")
    assert code == 0
    first = out.splitlines()[2]
    assert first.startswith("4+\\zeta+2 \\zeta^{2}+2 \\zeta^{3}+\\zeta^{4}+2 \\zeta^{5} & -1-2 \\zeta")
    assert "1+\\zeta^{2}" in out.splitlines()[4]


def test_periods_json_round_trip(capsys):
    code, out, _ = call(capsys, "periods", "--q", "7", "--basis", "chord-slide",
                        "--format", "json", "--numeric", "64")
    assert code == 0
    data = json.loads(out)
    tau = [[CycloNum.from_json(x) for x in row] for row in data["tau"]]
    assert tau == cmat(known.TAU_7_1).tolist()
    assert len(data["tau_numeric"]) == 3


@pytest.mark.parametrize("basis, construction", [
    ("natural", "direct"),
    ("natural", "closed-form"),
    ("schindler", "recurrence"),
    ("schindler", "direct"),
    ("klein", "direct"),
])
def test_periods_valid_combinations(capsys, basis, construction):
    code, out, _ = call(capsys, "periods", "--q", "7", "--basis", basis,
                        "--construction", construction)
    assert code == 0
    assert out.startswith("# q = 7")


def test_periods_text_is_deterministic(capsys):
    argv = ["periods", "--q", "9", "--basis", "natural", "--format", "text", "--numeric", "80"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second
    assert "row 1:" in first


@pytest.mark.parametrize("argv", [
    ["periods", "--q", "9", "--basis", "klein"],
    ["periods", "--q", "7", "--basis", "natural", "--construction", "recurrence"],
    ["periods", "--q", "7", "--basis", "schindler", "--construction", "closed-form"],
    ["periods", "--q", "8", "--basis", "natural"],
    ["periods", "--q", "7", "--basis", "natural", "--numeric", "10"],
    ["basis", "--p", "7", "--l", "1", "--m", "2", "--method", "cq1"],
    ["basis", "--p", "11", "--l", "1", "--m", "2", "--method", "klein"],
    ["basis", "--p", "7", "--l", "2", "--m", "2"],
    ["verify", "--g", "1"],
    ["identity", "--q", "4"],
])
def test_invalid_combinations(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code != 0
    assert out == ""
    assert len(err.strip().splitlines()) == 1
    assert err.startswith("chordslide: error:")


def test_unknown_choice_is_rejected(capsys):
    code, _, err = call(capsys, "periods", "--q", "7", "--basis", "weird")
    assert code == 2
    assert "invalid choice" in err


def test_basis_klein(capsys):
    code, out, _ = call(capsys, "basis", "--p", "7", "--l", "1", "--m", "2", "--method", "klein")
    assert code == 0
    data = json.loads(out)
    assert data["A"] == known.A_7_1_2
    assert data["T"] == known.T_7_2
    assert data["TAT"] == known.STANDARD_3
    assert [s["move"] for s in data["slides"]] == [2, 5, 5, 5, 6, 6]


def test_basis_default_method(capsys):
    code, out, _ = call(capsys, "basis", "--p", "7")
    assert code == 0
    data = json.loads(out)
    assert data["method"] == "cq1"
    assert data["T"] == known.T_7_1


def test_basis_generic_text(capsys):
    code, out, _ = call(capsys, "basis", "--p", "11", "--l", "1", "--m", "3", "--format", "text")
    assert code == 0
    assert out.startswith("A =")
    assert "TAT =" in out


def test_verify_exit_code(capsys):
    code, out, _ = call(capsys, "verify", "--g", "3")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CHORDSLIDE_PRECISION", "96")
    code, out, _ = call(capsys, "verify", "--g", "2")
    assert code == 0
    assert json.loads(out)["precision_bits"] == 96
    monkeypatch.setenv("CHORDSLIDE_PRECISION", "lots")
    code, _, err = call(capsys, "verify", "--g", "2")
    assert code == 2 and "CHORDSLIDE_PRECISION" in err


def test_identity(capsys):
    code, out, _ = call(capsys, "identity", "--q", "21")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chordslide", "identity", "--q", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["q"] == 7
