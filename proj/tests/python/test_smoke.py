"""Smoke tests for the _fraczeta extension module."""
import cmath
import json
import math
import os
import subprocess

import pytest

fz = pytest.importorskip("_fraczeta")


def test_classical_values():
    assert abs(fz.hurwitz_zeta(2).value - math.pi**2 / 6) < 1e-13
    assert abs(fz.gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    assert abs(fz.theta(1).value - 1.086434811213308) < 1e-13
    assert abs(fz.hurwitz_zeta(3, a=0.5).value - 7 * 1.2020569031595943) < 1e-12


def test_continuation_and_derivatives():
    assert abs(fz.hurwitz_zeta(-1).value + 1.0 / 12) < 1e-14
    assert abs(fz.hurwitz_zeta(0, l=1).value + 0.5 * math.log(2 * math.pi)) < 1e-13
    r = fz.hurwitz_zeta(complex(-2.5, 1.0), a=0.25)
    assert r.converged


def test_frac_series_phase():
    r = fz.frac_zeta_series(3, a=1.0, alpha=0.5)
    assert abs(cmath.phase(r.value) - math.pi / 2) < 1e-12
    assert abs(abs(r.value) - 0.19568447581736696) < 5e-12


def test_fe_evaluators_cross_agree():
    t2 = fz.frac_zeta_fe_triple(complex(-2.5, 0), a=0.7, alpha=0.4)
    t4 = fz.frac_zeta_fe_trig(complex(-2.5, 0), a=0.7, alpha=0.4)
    assert abs(t2.value - t4.value) < 1e-9
    assert t2.variant == "paper_negative_log"


def test_theta_variant_against_oracle():
    gl = fz.gl_derivative("theta", 1.0, 0.5)
    series = fz.frac_theta(1.0, 0.5)
    assert abs(gl.value - series.value) < 1e-4 * abs(series.value)


def test_domain_errors_are_typed():
    with pytest.raises(fz.DomainError):
        fz.frac_zeta_series(1.2, alpha=0.5)
    with pytest.raises(fz.PoleError):
        fz.gamma(-2.0)


def test_integral_bridge():
    r = fz.completed_zeta_integral(2.0)
    assert abs(r.value - math.pi**2 / 6) < 1e-9


def test_verify_suite_json():
    records = fz.verify("convolution")
    assert len(records) >= 2
    parsed = [json.loads(r) for r in records]
    assert any(p["verdict"] == "documented-discrepancy" for p in parsed)
    assert all("identity_id" in p for p in parsed)


def test_cli_roundtrip():
    cli = os.environ.get("FRACZETA_CLI")
    if not cli:
        pytest.skip("FRACZETA_CLI not set")
    out = subprocess.run([cli, "eval", "--method", "zeta", "--s", "2"],
                         capture_output=True, text=True, check=True)
    rec = json.loads(out.stdout)
    assert abs(rec["value"]["re"] - math.pi**2 / 6) < 1e-12
