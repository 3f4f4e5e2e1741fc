"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run with ``pytest -v tests/test_acceptance.py`` for one pass/fail line per
criterion (the PASS lines below are also printed, visible with ``-s``).
"""
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from ptdirac import verify
from ptdirac.kinematics import speeds
from ptdirac.symmetries import first_order_covariance_residual

SEED = 42
GOLDEN = Path(__file__).parent / "golden" / "dispersion_m3.csv"


def _as_map(checks):
    return {c.name: c.max_residual for c in checks}


@pytest.fixture(scope="module")
def clifford_results():
    return _as_map(verify.clifford_checks(SEED, 1000, 1e-13))


@pytest.fixture(scope="module")
def spinor_results():
    return _as_map(verify.spinor_checks(SEED, 1000, 1e-12))


@pytest.fixture(scope="module")
def observable_results():
    # 2000 trials -> 1000 pseudotachyon specs for the duality criterion
    return _as_map(verify.observable_checks(SEED, 2000, 1e-12))


@pytest.fixture(scope="module")
def symmetry_results():
    return _as_map(verify.symmetry_checks(SEED, 1000, 1e-12))


def _report(criterion, detail):
    print(f"ACCEPTANCE {criterion}: PASS ({detail})")


def test_criterion_01_clifford_suite(clifford_results):
    worst = max(clifford_results.values())
    assert worst <= 1e-13, clifford_results
    _report("1 clifford suite", f"max residual {worst:.3e} <= 1e-13, both bases")


def test_criterion_02_solution_suite(spinor_results):
    worst = spinor_results["spinors.dirac_solution"]
    assert worst <= 1e-12
    _report("2 solution suite", f"max |D w|/|w| {worst:.3e} <= 1e-12")


def test_criterion_03_normalizations(spinor_results):
    norm = spinor_results["spinors.norm_convention"]
    ident = spinor_results["spinors.normalization_identity"]
    assert norm <= 1e-11
    assert ident <= 1e-11
    _report("3 normalizations",
            f"|w^w - 2k/2eps| {norm:.3e}, |N^2 w^w V - 1| {ident:.3e} <= 1e-11")


def test_criterion_04_velocity_duality(observable_results):
    dual = observable_results["observables.velocity_duality"]
    closed = observable_results["observables.velocity_closed_form"]
    assert dual <= 1e-12
    assert closed <= 1e-12
    _report("4 velocity duality",
            f"||<v>| k/eps - 1| {dual:.3e}, closed-form gap {closed:.3e} <= 1e-12")


def test_criterion_05_constraint_systems(observable_results):
    cons = observable_results["observables.constraints"]
    vbar = observable_results["observables.four_velocity"]
    sbar = observable_results["observables.spin_four_vector"]
    assert cons <= 1e-11
    assert vbar <= 1e-11
    assert sbar <= 1e-11
    _report("5 constraint systems",
            f"residuals {cons:.3e}, vbar {vbar:.3e}, sbar {sbar:.3e} <= 1e-11")


def test_criterion_06_discrete_symmetries(symmetry_results):
    unit = symmetry_results["symmetries.unitarity"]
    inter = symmetry_results["symmetries.intertwining"]
    pct = symmetry_results["symmetries.pct_product"]
    assert unit <= 1e-14
    assert inter <= 1e-12
    assert pct <= 1e-14
    _report("6 discrete symmetries",
            f"unitarity {unit:.3e} <= 1e-14, intertwining {inter:.3e} <= 1e-12, "
            f"PCT {pct:.3e} <= 1e-14")


def test_criterion_07_lorentz(symmetry_results):
    rng = np.random.default_rng(SEED)
    ratios = []
    for _ in range(20):
        a = rng.normal(size=(4, 4)) * 1e-3
        dom = a - a.T
        ratios.append(first_order_covariance_residual(dom)
                      / first_order_covariance_residual(dom / 2.0))
    assert all(3.6 <= r <= 4.4 for r in ratios), ratios
    bcov = symmetry_results["symmetries.boost_covariance"]
    g5c = symmetry_results["symmetries.gamma5_commutation"]
    assert bcov <= 1e-10
    assert g5c <= 1e-13
    _report("7 lorentz",
            f"halving ratios within 4 +- 10%, boost covariance {bcov:.3e} <= 1e-10, "
            f"[S, g5] {g5c:.3e} <= 1e-13")


def test_criterion_08_dispersion():
    s = speeds(4.0, 3.0)
    assert abs(s.u - 0.661437828) <= 1e-9
    assert abs(s.v - 0.8) <= 1e-9
    assert abs(s.w - 1.25) <= 1e-9
    m = 3.0
    grid = np.linspace(1e-3, 30.0, 400)
    values = [speeds(float(e), m) for e in grid]
    assert all(a.v < b.v for a, b in zip(values, values[1:]))
    assert max(abs(x.v * x.w - 1.0) for x in values) <= 1e-13
    for e in np.linspace(m / 1e5, m / 100.0, 50):
        expected = e / m
        assert abs(speeds(float(e), m).v - expected) / expected <= 0.01
    _report("8 dispersion", "spot values within 1e-9, v strictly increasing, "
            "newtonian trend within 1%, v*w = 1 within 1e-13")


def test_criterion_09_representation_consistency(spinor_results):
    defect = spinor_results["spinors.representation_map"]
    assert defect <= 1e-12
    _report("9 representation consistency",
            f"Weyl -> standard ray defect {defect:.3e} <= 1e-12")


def _run_cli(*args):
    env = os.environ.copy()
    env.pop("PT_DIRAC_TOL", None)
    return subprocess.run([sys.executable, "-m", "ptdirac", *args],
                          capture_output=True, env=env)


def test_criterion_10_cli():
    golden = _run_cli("dispersion", "--mass", "3", "--eps-min", "0",
                      "--eps-max", "10", "--steps", "11")
    assert golden.returncode == 0
    assert golden.stdout == GOLDEN.read_bytes()

    bad_spec = _run_cli("spinor", "--species", "pt", "--momentum", "0,0,2",
                        "--mass", "3")
    assert bad_spec.returncode == 2
    assert b"error: NonPhysicalMomentum" in bad_spec.stderr

    bad_io = _run_cli("dispersion", "--mass", "3", "--eps-max", "10",
                      "--steps", "11", "--out", "/nonexistent/dir/out.csv")
    assert bad_io.returncode == 3

    failed = _run_cli("verify", "--trials", "40", "--tol", "1e-30")
    assert failed.returncode == 1

    full_a = _run_cli("verify")
    full_b = _run_cli("verify")
    assert full_a.returncode == 0, full_a.stdout.decode()
    assert full_a.stdout == full_b.stdout
    _report("10 cli", "golden CSV byte-identical, exit codes 0/1/2/3, "
            "verify deterministic and passing at defaults")
