import math

import numpy as np
import pytest

from antibunch.emitter import (
    CoherentDrive,
    CorrelationCurve,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_heitler,
    bare_g2_incoherent,
    classify,
    fano_factor,
    g2_from_distribution,
    gamma_mollow,
    mollow_envelopes,
    tau_grid,
)

TAU = np.linspace(0.0, 12.0, 200)


def test_incoherent_is_single_exponential():
    params = EmitterParams(1.0, IncoherentDrive(0.5))
    curve = bare_g2_incoherent(params, TAU)
    assert curve.values[0] == pytest.approx(0.0, abs=1e-12)
    assert np.allclose(curve.values, 1.0 - np.exp(-1.5 * TAU), atol=1e-12)


def test_heitler_is_square_of_undriven_incoherent():
    params = EmitterParams(1.0, CoherentDrive(1e-3))
    heitler = bare_g2_heitler(params, TAU).values
    base = 1.0 - np.exp(-0.5 * TAU)
    assert np.allclose(heitler, base**2, atol=1e-12)


def test_coherent_weak_drive_approaches_heitler():
    params = EmitterParams(1.0, CoherentDrive(1e-3))
    coh = bare_g2_coherent(params, TAU).values
    heit = bare_g2_heitler(params, TAU).values
    assert np.max(np.abs(coh - heit)) < 1e-4


def test_coherent_strong_drive_oscillates_within_envelopes():
    params = EmitterParams(1.0, CoherentDrive(3.0))
    curve = bare_g2_coherent(params, TAU).values
    lo, hi = mollow_envelopes(params, TAU)
    assert np.all(curve <= hi + 1e-9)
    assert np.all(curve >= lo - 1e-9)
    assert np.max(curve) > 1.0  # overshoots the plateau (Rabi oscillations)


def test_gamma_mollow_regimes():
    weak = EmitterParams(1.0, CoherentDrive(0.05))
    strong = EmitterParams(1.0, CoherentDrive(2.0))
    assert gamma_mollow(weak).imag == pytest.approx(0.0)
    assert gamma_mollow(strong).real == pytest.approx(0.0)
    assert gamma_mollow(strong).imag != 0.0


def test_curves_settle_to_plateau():
    long_tau = np.linspace(0.0, 80.0, 50)
    for params, fn in [
        (EmitterParams(1.0, IncoherentDrive(1.0)), bare_g2_incoherent),
        (EmitterParams(1.0, CoherentDrive(2.0)), bare_g2_coherent),
    ]:
        assert fn(params, long_tau).values[-1] == pytest.approx(1.0, abs=1e-10)


def test_correlation_curve_validation():
    with pytest.raises(ValueError):
        CorrelationCurve(tau=np.array([0.0, 1.0]), values=np.array([0.0, -1.0]))
    with pytest.raises(ValueError):
        CorrelationCurve(tau=np.array([1.0, 0.5]), values=np.array([0.0, 0.0]))


def test_tau_grid_shape_and_monotonicity():
    grid = tau_grid(10.0, n_points=150)
    assert grid[0] == 0.0
    assert np.all(np.diff(grid) > 0)
    assert grid[-1] == pytest.approx(10.0)


def test_photon_statistics_helpers():
    # Poisson distribution: g2 = 1, Fano = 1
    n = np.arange(60)
    lam = 3.0
    p = np.exp(-lam) * lam**n / np.array([math.factorial(k) for k in n])
    assert g2_from_distribution(p) == pytest.approx(1.0, abs=1e-10)
    assert fano_factor(p) == pytest.approx(1.0, abs=1e-10)
    # single photon: g2 = 0
    single = np.array([0.0, 1.0])
    assert g2_from_distribution(single) == 0.0


def test_classify_labels():
    params = EmitterParams(1.0, IncoherentDrive(1.0))
    report = classify(bare_g2_incoherent(params, TAU))
    assert report["antibunched"]
    assert report["sub_poissonian"]
