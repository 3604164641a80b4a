"""Smoke checks for the python module and the CLI.

The build tree exports NEGABETA_PYMODULE_DIR (directory holding the compiled
module), NEGABETA_PYPKG_DIR (the pure-python package), and NEGABETA_CLI (the
command-line binary).  Installed wheels need none of these.
"""

import json
import os
import subprocess
import sys

import pytest

for var in ("NEGABETA_PYPKG_DIR", "NEGABETA_PYMODULE_DIR"):
    d = os.environ.get(var)
    if d and d not in sys.path:
        sys.path.insert(0, d)

negabeta = pytest.importorskip("negabeta")

TRIB = "x^3-x^2-x-1"


@pytest.fixture(scope="module")
def trib():
    return negabeta.Base(TRIB)


def test_context_facts(trib):
    assert trib.degree == 3
    assert trib.poly.replace(" ", "") == TRIB
    assert abs(trib.beta - 1.8392867552141612) < 1e-12


def test_reference_words(trib):
    assert trib.reference_l() == "10(1)"
    assert trib.reference_r_star() == "010(1)"
    assert trib.renyi_one() == "111"
    assert not trib.trivial_negbeta()


def test_collapsed_set_detection():
    assert negabeta.Base("x^3-x-1").trivial_negbeta()


def test_expand_golden_one():
    g = negabeta.Base("x^2-x-1")
    out = g.expand("1")
    assert out["pointed"] == "110•"
    assert out["word"] == "110"
    assert out["int_len"] == 3
    assert not out["truncated"]


def test_admissibility(trib):
    assert trib.admissible("11")
    assert not trib.admissible("12")
    # "111" expands 1 itself and sits on the boundary: not admissible.
    assert trib.admissible("110", sign="pos")
    assert not trib.admissible("111", sign="pos")


def test_integer_window(trib):
    w = trib.integers(radius="3")
    assert w["words"] == ["1100", "10", "11", "0", "1", "110", "111"]
    assert len(w["gap_letters"]) == len(w["words"]) - 1
    values = w["values"]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert 0.0 in values


def test_delta_exact(trib):
    approx, coords = trib.delta(0)
    assert approx == 1.0
    assert coords == ["1", "0", "0"]
    approx1, _ = trib.delta(1)
    assert abs(approx1 - (trib.beta - 1.0)) < 1e-12


def test_morphisms(trib):
    phi = trib.phi()
    assert phi["kind"] == "antimorphism"
    assert phi["rules"] == {"0": "01", "1": "02", "2": "0"}
    psi = trib.psi()
    assert psi["kind"] == "morphism"
    assert psi["rules"] == {"0": "0201", "1": "001", "2": "01"}
    assert trib.commutation(12)
    assert trib.conjugacy() == "01"


def test_error_type():
    with pytest.raises(negabeta.NumerationError):
        negabeta.Base("x^2+1")  # no real root above one
    with pytest.raises(negabeta.NumerationError):
        negabeta.Base("x^2-x-1").expand("1", sign="nope")


@pytest.fixture(scope="module")
def cli():
    path = os.environ.get("NEGABETA_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("NEGABETA_CLI not set")
    return path


def run_cli(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def test_cli_reference_matches_module(cli, trib):
    doc = json.loads(run_cli(cli, "reference", "--poly", TRIB))
    assert doc["neg"]["d_l"] == trib.reference_l()
    assert doc["neg"]["r_star"] == trib.reference_r_star()
    assert doc["pos"]["d_1"] == trib.renyi_one()


def test_cli_integers_verify_roundtrip(cli, tmp_path):
    out = tmp_path / "window.json"
    run_cli(cli, "integers", "--poly", TRIB, "--radius", "3", "--out",
            str(out))
    report = json.loads(
        run_cli(cli, "verify", "--in", str(out), "--poly", TRIB))
    assert report["ok"] is True
    assert report["points"] == 7


def test_cli_usage_error(cli):
    proc = subprocess.run([cli, "base", "--no-such-flag"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
