"""Smoke tests for the python bindings."""

import math

import pytest

import spinfaraday as sf

THETA_PLUS = 1.929069037103836e-2


def test_paper_preset_angle():
    p = sf.PhysicalParams.paper()
    assert p.detuning == pytest.approx(-1e13)
    assert p.weak_coupling
    theta = sf.faraday_angle(p, sf.PAPER_TIME_S, 1.0)
    assert theta == pytest.approx(THETA_PLUS, rel=1e-12)
    assert sf.faraday_angle(p, sf.PAPER_TIME_S, 0.5) == 0.0
    assert sf.faraday_angle(p, sf.PAPER_TIME_S, 0.0) == pytest.approx(-theta)


def test_solution_coefficients():
    alpha, omega_shift, g = sf.solution_coefficients(sf.PhysicalParams.paper(), sf.PAPER_TIME_S)
    assert alpha == pytest.approx(-9.8e-3)
    assert omega_shift == pytest.approx(-9.604e8)
    assert abs(g) <= 2 * abs(alpha) + 1e-15


def test_fluctuation_regimes():
    p = sf.PhysicalParams.paper()
    shot = sf.faraday_fluctuation(p, sf.PAPER_TIME_S, 1.0, sf.PAPER_PHOTON_NUMBER)
    assert shot == pytest.approx(0.5 / math.sqrt(sf.PAPER_PHOTON_NUMBER), rel=1e-12)
    sat = sf.faraday_fluctuation(p, sf.PAPER_TIME_S, 0.5, 1e12)
    assert sat == pytest.approx(THETA_PLUS, rel=1e-6)


def test_polarization_round_trip():
    s = sf.jones_to_stokes(1 / math.sqrt(2), 1j / math.sqrt(2))
    assert s.s3 == pytest.approx(1.0)
    ellipse = sf.stokes_to_ellipse(sf.StokesVector(1.0, 0.0, 1.0, 0.0))
    assert ellipse.phi == pytest.approx(math.pi / 4)
    back = sf.ellipse_to_stokes(ellipse)
    assert back.s2 == pytest.approx(1.0)
    rotated = sf.rotation_in_s1_s2(back, 0.25)
    assert sf.faraday_from_stokes(rotated.s1, rotated.s2)[0] == pytest.approx(0.25)


def test_operator_matrices():
    a = sf.annihilation_matrix(sf.PhotonMode.L, 2)
    assert a.shape == (36, 36)
    suz = sf.sigma_matrix(sf.SigmaKind.UpZ, 1)
    assert suz[0, 0] == 1.0 and suz[1, 1] == -1.0

    h = sf.hamiltonian_matrix(sf.HamiltonianPart.Total, sf.PhysicalParams.paper(), 2)
    assert abs(h - h.conj().T).max() < 1e-12 * abs(h).max()

    rho = sf.initial_density_matrix(2.0, 0.5, 12, tail_tolerance=1e-6)
    assert rho.trace().real == pytest.approx(1.0, abs=1e-12)


def test_estimator_round_trip():
    p = sf.PhysicalParams.paper()
    ext = sf.simulate_record(p, 0.7, sf.PAPER_TIME_S, 5e5, 10000, 5e-4, seed=11)
    zero = sf.simulate_record(p, 0.5, sf.PAPER_TIME_S, 5e5, 10000, 5e-4, seed=12)
    bg = sf.simulate_background(5e-4, 10000, seed=13)
    est = sf.estimate_from_records(ext, zero, bg, bootstrap_resamples=100)
    assert est.selected == pytest.approx(0.7, abs=0.05)
    assert est.tau_low + est.tau_high == pytest.approx(1.0)
    assert est.bootstrap_se is not None and est.bootstrap_se > 0

    hand = sf.purity_from_noise(
        sf.NoiseBudget(math.sqrt(0.84), 1.0, 0.0, 1e12), sf.PurityMode.LargeN
    )
    assert hand.tau_low == pytest.approx(0.3)
    assert hand.tau_high == pytest.approx(0.7)


def test_oracle_small():
    p = sf.PhysicalParams.paper()
    rep = sf.faraday_exact(p, 1.0, sf.PAPER_TIME_S, cutoff=12, photons_per_mode=1.0,
                           tail_tolerance=1e-6)
    ratio = rep.theta_exact / rep.theta_analytic
    assert 0.49 < ratio < 0.51
    assert abs(sf.faraday_exact(p, 0.5, sf.PAPER_TIME_S, cutoff=12, photons_per_mode=1.0,
                                tail_tolerance=1e-6).theta_exact) < 1e-9
    assert rep.operator_residual > 0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        sf.PhysicalParams(1.0, 2.0, 2.0)  # zero detuning
    with pytest.raises(RuntimeError):
        sf.faraday_exact(sf.PhysicalParams.paper(), 1.0, sf.PAPER_TIME_S,
                         cutoff=4, photons_per_mode=4.0)  # hopeless truncation
    with pytest.raises(OSError):
        sf.read_record("/nonexistent/record.txt")


def test_record_io(tmp_path):
    path = str(tmp_path / "rec.txt")
    sf.write_record(path, [1e-3, -2e-3], "smoke")
    assert sf.read_record(path) == [1e-3, -2e-3]
