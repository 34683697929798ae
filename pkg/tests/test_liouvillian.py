import numpy as np
import pytest

from antibunch.emitter import (
    CoherentDrive,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_incoherent,
)
from antibunch.liouvillian import (
    SensorSpec,
    SystemSpec,
    build_liouvillian,
    emission_spectrum,
    filtered_g2_oracle,
    g2_tau,
    sensor_population,
    steady_state,
)

TAU = np.linspace(0.0, 8.0, 17)


def test_steady_state_is_density_matrix():
    params = EmitterParams(1.0, CoherentDrive(1.5))
    liou = build_liouvillian(SystemSpec(params))
    rho = steady_state(liou)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(rho - rho.conj().T)) < 1e-12
    assert np.min(np.linalg.eigvalsh(rho)) > -1e-9


def test_weak_drive_population():
    # excited-state population 4 Omega^2 / gamma^2 at weak resonant driving
    Om = 1e-3
    params = EmitterParams(1.0, CoherentDrive(Om))
    liou = build_liouvillian(SystemSpec(params))
    rho = steady_state(liou)
    pop = rho[1, 1].real
    assert pop == pytest.approx(4.0 * Om**2, rel=1e-4)


def test_incoherent_steady_population():
    params = EmitterParams(1.0, IncoherentDrive(1.0))
    liou = build_liouvillian(SystemSpec(params))
    rho = steady_state(liou)
    assert rho[1, 1].real == pytest.approx(0.5, abs=1e-12)


def test_regression_reproduces_incoherent_closed_form():
    params = EmitterParams(1.0, IncoherentDrive(0.7))
    liou = build_liouvillian(SystemSpec(params))
    oracle = g2_tau(liou, "sigma", TAU).values
    closed = bare_g2_incoherent(params, TAU).values
    assert np.max(np.abs(oracle - closed)) < 1e-10


def test_regression_reproduces_coherent_closed_form():
    for Om in (0.05, 3.0):
        params = EmitterParams(1.0, CoherentDrive(Om))
        liou = build_liouvillian(SystemSpec(params))
        oracle = g2_tau(liou, "sigma", TAU).values
        closed = bare_g2_coherent(params, TAU).values
        assert np.max(np.abs(oracle - closed)) < 1e-10


def test_sensor_population_scales_with_coupling_squared():
    params = EmitterParams(1.0, CoherentDrive(0.5))
    n1 = sensor_population(params, SensorSpec(Gamma=1.0, epsilon=1e-5))
    n2 = sensor_population(params, SensorSpec(Gamma=1.0, epsilon=2e-5))
    assert n2 / n1 == pytest.approx(4.0, rel=1e-6)


def test_filtered_oracle_plateau_and_coupling_invariance():
    params = EmitterParams(1.0, CoherentDrive(0.5))
    plateau = filtered_g2_oracle(params, 1.0, np.array([50.0])).values[0]
    assert plateau == pytest.approx(1.0, abs=1e-5)
    eps = SensorSpec(Gamma=1.0).coupling(1.0)
    a = filtered_g2_oracle(params, 1.0, TAU, epsilon=eps).values
    b = filtered_g2_oracle(params, 1.0, TAU, epsilon=eps / 2).values
    assert np.max(np.abs(a - b)) < 1e-6


def test_filtered_oracle_truncation_sufficiency():
    params = EmitterParams(1.0, CoherentDrive(0.5))
    a = filtered_g2_oracle(params, 1.0, TAU, n_max=2).values
    b = filtered_g2_oracle(params, 1.0, TAU, n_max=3).values
    assert np.max(np.abs(a - b)) < 1e-6


def test_wide_filter_approaches_bare_correlations():
    params = EmitterParams(1.0, CoherentDrive(2.0))
    filtered = filtered_g2_oracle(params, 1e3, TAU).values
    bare = bare_g2_coherent(params, TAU).values
    assert np.max(np.abs(filtered - bare)) < 1e-2


def test_emission_spectrum_mollow_triplet():
    params = EmitterParams(1.0, CoherentDrive(5.0))
    omegas = np.linspace(-15.0, 15.0, 121)
    spectrum = emission_spectrum(params, omegas, Gamma_detector=0.2)
    # three local maxima: central line and two sidebands near +-2 Omega
    peak = omegas[np.argmax(spectrum)]
    assert abs(peak) < 0.3
    side = spectrum[np.abs(np.abs(omegas) - 10.0) < 0.5]
    assert np.max(side) > 3.0 * np.min(spectrum)


def test_coupling_guard_rejects_strong_sensor():
    params = EmitterParams(1.0, CoherentDrive(0.5))
    with pytest.raises(ValueError):
        SystemSpec(params, SensorSpec(Gamma=1.0, epsilon=0.5))
