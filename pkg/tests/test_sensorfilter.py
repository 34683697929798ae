import numpy as np
import pytest

from antibunch.emitter import CoherentDrive, EmitterParams, IncoherentDrive
from antibunch.liouvillian import filtered_g2_oracle
from antibunch.sensorfilter import (
    filtered_g2_coherent_coefficients,
    filtered_g2_coherent_general,
    filtered_g2_coherent_zero_delay,
    filtered_g2_heitler,
    filtered_g2_incoherent,
    filtered_g2_incoherent_isoline,
    filtered_g2_incoherent_zero_delay,
    filtered_g2_mollow_broadband,
    filtered_g2_mollow_central,
    filtered_g2_mollow_narrowband,
    max_bunching_scan,
)

TAU = np.linspace(0.0, 8.0, 17)
INCO = EmitterParams(1.0, IncoherentDrive(1.0))


def test_incoherent_zero_delay_formula():
    # 2 Gs / (Gs + 3 G): crosses 1 at G = Gs / 3, reaches 2 as G -> 0
    Gs = INCO.Gamma_sigma
    assert filtered_g2_incoherent_zero_delay(INCO, Gs / 3.0) == pytest.approx(1.0)
    assert filtered_g2_incoherent_zero_delay(INCO, 1e-9) == pytest.approx(2.0, abs=1e-6)
    assert filtered_g2_incoherent_zero_delay(INCO, 1e9) < 1e-6


def test_incoherent_curve_matches_oracle():
    for G in (0.3, 2.0):
        closed = filtered_g2_incoherent(INCO, G, TAU).values
        oracle = filtered_g2_oracle(INCO, G, TAU).values
        assert np.max(np.abs(closed - oracle)) < 1e-6


def test_incoherent_equal_rate_limit_is_smooth():
    Gs = INCO.Gamma_sigma
    inside = filtered_g2_incoherent(INCO, Gs, TAU).values
    outside = filtered_g2_incoherent(INCO, Gs * (1.0 + 5e-6), TAU).values
    assert np.max(np.abs(inside - outside)) < 1e-4


def test_incoherent_isoline_crossing():
    # just below G = Gs/3 the curve starts barely above 1, undershoots the
    # plateau and crosses unity once
    G = 0.66
    crossings = filtered_g2_incoherent_isoline(INCO, G)
    assert len(crossings) == 1
    val = filtered_g2_incoherent(INCO, G, np.array([0.0, crossings[0]])).values
    assert val[1] == pytest.approx(1.0, abs=1e-9)
    # far from the boundary the approach to the plateau is one-sided
    assert len(filtered_g2_incoherent_isoline(INCO, 0.2)) == 0
    assert len(filtered_g2_incoherent_isoline(INCO, 50.0)) == 0


def test_coherent_zero_delay_against_oracle():
    for Om, G in [(0.5, 2.0), (20.0, 2.0)]:
        params = EmitterParams(1.0, CoherentDrive(Om))
        zd = filtered_g2_coherent_zero_delay(params, G)
        oracle = filtered_g2_oracle(params, G, np.array([0.0])).values[0]
        assert zd == pytest.approx(oracle, abs=1e-6)


def test_coherent_coefficients_reconstruct_oracle():
    params = EmitterParams(1.0, CoherentDrive(2.0))
    coeffs = filtered_g2_coherent_coefficients(params, 0.7)
    assert len(coeffs.rates) == 7
    curve = coeffs.evaluate(TAU)
    oracle = filtered_g2_oracle(params, 0.7, TAU).values
    assert np.max(np.abs(curve - oracle)) < 1e-6
    assert coeffs.zero_delay == pytest.approx(
        filtered_g2_coherent_zero_delay(params, 0.7), abs=1e-8)


def test_coherent_general_falls_back_near_degeneracy():
    # Gamma = gamma makes rate gamma_4 = (Gamma + gamma)/2 collide with
    # others only accidentally; pick the truly degenerate weak-drive point
    # 8 Omega = gamma where gm = 0 and the pole pairs merge
    params = EmitterParams(1.0, CoherentDrive(0.125))
    curve = filtered_g2_coherent_general(params, 1.0, TAU)
    oracle = filtered_g2_oracle(params, 1.0, TAU).values
    assert np.max(np.abs(curve.values - oracle)) < 1e-5


def test_heitler_matches_weak_drive_oracle():
    params = EmitterParams(1.0, CoherentDrive(1e-2))
    closed = filtered_g2_heitler(params, 1.5, TAU).values
    oracle = filtered_g2_oracle(params, 1.5, TAU).values
    assert np.max(np.abs(closed - oracle)) < 5e-4  # O(Omega^2) bias only


def test_heitler_zero_delay_formula():
    params = EmitterParams(1.0, CoherentDrive(1e-3))
    for G in (0.3, 1.0, 3.0):
        val = filtered_g2_heitler(params, G, np.array([0.0])).values[0]
        assert val == pytest.approx((1.0 / (1.0 + G)) ** 2, abs=1e-12)


def test_mollow_central_peak_zero_delay():
    params = EmitterParams(1.0, CoherentDrive(20.0))
    for G in (2.0, 5.0):
        val = filtered_g2_mollow_central(params, G, np.array([0.0])).values[0]
        assert val == pytest.approx(3.0 * (G + 1.0) / (3.0 * G + 1.0), abs=1e-12)


def test_mollow_narrowband_bunches():
    params = EmitterParams(1.0, CoherentDrive(20.0))
    curve = filtered_g2_mollow_narrowband(params, 1e-2, np.array([0.0]))
    assert curve.values[0] > 2.0


def test_mollow_broadband_recovers_bare_antibunching():
    params = EmitterParams(1.0, CoherentDrive(20.0))
    val = filtered_g2_mollow_broadband(params, 2e4, np.array([0.0])).values[0]
    assert val < 1e-2


def test_max_bunching_scan_supremum():
    table = max_bunching_scan(Omega_grid=np.logspace(0.5, 2, 7))
    assert np.max(table["g2_max"]) <= 3.0 + 1e-3
    assert np.max(table["g2_max"]) > 2.9


def test_drive_type_guards():
    with pytest.raises(TypeError):
        filtered_g2_incoherent(EmitterParams(1.0, CoherentDrive(1.0)), 1.0, TAU)
    with pytest.raises(TypeError):
        filtered_g2_coherent_zero_delay(INCO, 1.0)
