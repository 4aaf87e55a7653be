import json
import math
import os
import subprocess

import pytest

import casimir_cavity as cc

K = cc.codata_constants()


def test_version():
    assert cc.__version__


def test_ideal_cavity():
    geom = cc.CavityGeometry.from_area(1.0, 1e-6)
    assert cc.casimir_energy(geom, K) == pytest.approx(-4.3337525748258448657e-10, rel=1e-14)
    assert cc.casimir_pressure(1e-6, K) == pytest.approx(-1.3001257724477534597e-3, rel=1e-14)
    assert cc.fundamental_frequency(60e-9, K) == pytest.approx(2.5e15, rel=5e-3)


def test_oracle():
    r = cc.regularized_mode_sum(cc.ModeSumSpec.abel_plana())
    assert r.finite_part == pytest.approx(1 / 120, rel=1e-8)
    geom = cc.CavityGeometry.from_area(1.0, 1e-7)
    o = cc.oracle_energy(geom, cc.ModeSumSpec.exponential_cutoff(), K)
    assert abs(o.energy - cc.casimir_energy(geom, K)) <= o.error_estimate


def test_gravity():
    src = cc.GravitationalSource.create(5.972e24, 6.371e6, K)
    geom = cc.CavityGeometry.from_area(1.0, 1e-6)
    exact = cc.force_exact(geom, src, K)
    weak = cc.force_weak_field(geom, src.g_local, K)
    assert exact > 0
    assert abs(weak - exact) <= 2 * (src.alpha / src.radius) * exact
    f, dphi, product = cc.force_as_potential_difference(geom, 9.81, K)
    assert product == cc.force_weak_field(geom, 9.81, K)


def test_reduction_factor():
    eta = cc.reduction_factor(6.5e-9, cc.MirrorMaterial.aluminium(K), K)
    assert 0.05 <= eta <= 0.10


def test_stack_and_detectability():
    cfg = cc.StackConfig()
    cfg.layers = 1_000_000
    cfg.disk_diameter = 0.1
    cfg.gap = 5e-9
    cfg.layer_pitch = 100e-9
    cfg.spacer = cc.SpacerMaterial.create(1.0)
    cfg.mirror = cc.MirrorMaterial.aluminium(K)
    cfg.reduction_override = 0.07
    rep = cc.stack_force(cfg, K)
    assert rep.force_total == pytest.approx(6.2415273414360659e-16, rel=1e-13)
    ratio, detectable = cc.detectability(rep)
    assert detectable and ratio > 1
    doc = json.loads(rep.to_json())
    assert doc["force_total"] == rep.force_total
    assert len(rep.notes) >= 1


def test_errors_are_python_exceptions():
    with pytest.raises(cc.ValidationError):
        cc.CavityGeometry.from_area(-1.0, 1e-9)
    with pytest.raises(cc.DomainError):
        cc.GravitationalSource.create(1e30, 1.0, K)


def test_run_cli_in_process():
    status, out, err = cc.run_cli(["ideal", "--gap", "60nm"])
    assert status == 0
    assert json.loads(out)["fundamental_frequency"] == pytest.approx(2.5e15, rel=5e-3)
    status, _, err = cc.run_cli(["ideal", "--gap", "60"])
    assert status == 2
    assert "unit" in err


@pytest.mark.skipif("CASIMIR_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary():
    proc = subprocess.run(
        [os.environ["CASIMIR_CLI"], "stack", "--eta", "0.07", "--index", "1"],
        capture_output=True, text=True, check=True)
    doc = json.loads(proc.stdout)
    assert math.isclose(doc["report"]["force_total"], 6.2415273414360659e-16, rel_tol=1e-13)
