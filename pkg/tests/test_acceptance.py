"""Acceptance suite: one test per release criterion, with the tolerance
stated in the assertion.  Run with ``pytest -v`` for one pass/fail line per
criterion."""

import time

import numpy as np
import pytest
from scipy import integrate

from antibunch.cli import main as cli_main
from antibunch.emitter import (
    CoherentDrive,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_incoherent,
)
from antibunch.jitter import (
    JitterKernel,
    jittered_g2_analytic,
    jittered_g2_numeric,
    kernel_density,
)
from antibunch.liouvillian import (
    SystemSpec,
    build_liouvillian,
    filtered_g2_oracle,
    steady_state,
)
from antibunch.noise import NoiseSpec, mix_noise
from antibunch.numerics import propagate
from antibunch.sensorfilter import (
    filtered_g2_coherent_coefficients,
    filtered_g2_coherent_zero_delay,
    filtered_g2_incoherent,
    filtered_g2_incoherent_zero_delay,
    max_bunching_scan,
)

INCO = EmitterParams(1.0, IncoherentDrive(1.0))
KINDS = ("heaviside", "exponential", "laplace", "gaussian")


def _perfect_signal(tau):
    """A perfectly antibunched zero-delay point: bare incoherent g2."""
    return bare_g2_incoherent(INCO, tau)


def test_c01_noise_zero_delay_arithmetic():
    tau = np.array([0.0])
    signal = _perfect_signal(tau)
    cases = [
        (NoiseSpec(xi=np.sqrt(2.0) - 1.0, model="coherent"), 0.5),
        (NoiseSpec(xi=2.0, model="coherent"), 8.0 / 9.0),
        (NoiseSpec(xi=1.0 / 3.0, model="thermal", gamma_n=1.0), 0.5),
    ]
    for spec, expected in cases:
        value = mix_noise(signal, spec).values[0]
        assert abs(value - expected) < 1e-9


def test_c02_kernel_normalization_and_variance():
    for kind in KINDS:
        for Gamma in (0.5, 2.0):
            kernel = JitterKernel(kind=kind, Gamma=Gamma,
                                  convention="equal_variance")
            p = kernel.shape_parameter
            hi = {"heaviside": p, "exponential": 50.0 / p,
                  "laplace": 50.0 / p, "gaussian": 12.0 * p}[kind]
            lo = 0.0 if kind == "exponential" else -hi
            norm, _ = integrate.quad(
                lambda t: kernel_density(kernel, np.atleast_1d(t))[0],
                lo, hi, limit=400)
            var, _ = integrate.quad(
                lambda t: (t - kernel.mean_delay) ** 2
                * kernel_density(kernel, np.atleast_1d(t))[0],
                lo, hi, limit=400)
            assert abs(norm - 1.0) < 1e-8
            assert abs(var - 1.0 / Gamma**2) < 1e-6


def test_c03_jitter_closed_forms_match_quadrature():
    start = time.monotonic()
    tau = np.linspace(0.0, 10.0, 11)
    regimes = [
        (EmitterParams(1.0, IncoherentDrive(1.0)),
         lambda th: bare_g2_incoherent(INCO, th).values, 2.0),
        (EmitterParams(1.0, CoherentDrive(2.0)),
         lambda th: bare_g2_coherent(
             EmitterParams(1.0, CoherentDrive(2.0)), th).values, 0.75),
    ]
    worst = 0.0
    for params, bare, decay in regimes:
        for kind in KINDS:
            for Gamma in (0.5, 1.0, 2.0, 5.0):
                kernel = JitterKernel(kind=kind, Gamma=Gamma,
                                      convention="equal_variance")
                closed = jittered_g2_analytic(params, kernel, tau).values
                oracle = jittered_g2_numeric(bare, kernel, tau, decay).values
                worst = max(worst, float(np.max(np.abs(closed - oracle))))
    assert worst < 1e-5
    assert time.monotonic() - start < 60.0


def test_c04_jitter_limits():
    tau = np.linspace(0.0, 10.0, 41)
    for params, bare in [
            (INCO, bare_g2_incoherent(INCO, tau).values),
            (EmitterParams(1.0, CoherentDrive(2.0)),
             bare_g2_coherent(EmitterParams(1.0, CoherentDrive(2.0)),
                              tau).values)]:
        for kind in KINDS:
            sharp = JitterKernel(kind=kind, Gamma=1e3,
                                 convention="equal_variance")
            assert np.max(np.abs(
                jittered_g2_analytic(params, sharp, tau).values - bare)) < 1e-2
            broad = JitterKernel(kind=kind, Gamma=1e-2,
                                 convention="equal_variance")
            assert np.max(np.abs(
                jittered_g2_analytic(params, broad, tau).values - 1.0)) < 1e-2


def test_c05_filtered_incoherent_zero_delay():
    grid = np.logspace(-2, 2, 20)
    zero = np.array([0.0])
    for Gamma in grid:
        formula = filtered_g2_incoherent_zero_delay(INCO, Gamma)
        closed = filtered_g2_incoherent(INCO, Gamma, zero).values[0]
        oracle = filtered_g2_oracle(INCO, Gamma, zero).values[0]
        assert abs(formula - closed) < 1e-8
        assert abs(formula - oracle) < 1e-5
    assert abs(filtered_g2_incoherent_zero_delay(INCO, 1e-3) - 2.0) < 1e-2
    assert abs(filtered_g2_incoherent_zero_delay(INCO, 1e3)) < 1e-2


def test_c06_filtered_incoherent_small_linewidth_shape():
    # the curve follows the thermal shape 1 + A e^(-Gamma tau); the
    # amplitude A = g2(0) - 1 = 1 - O(Gamma/Gamma_sigma) is anchored at
    # zero delay, where the first-order linewidth correction lives
    Gamma = 1e-2 * INCO.Gamma_sigma
    tau = np.linspace(0.0, 3.0 / Gamma, 400)
    curve = filtered_g2_incoherent(INCO, Gamma, tau).values
    amplitude = curve[0] - 1.0
    assert np.max(np.abs(curve - (1.0 + amplitude * np.exp(-Gamma * tau)))) < 2e-2


def test_c07_filtered_coherent_seven_exponential():
    # grid chosen off the degenerate denominators: all Omega > gamma/8 so
    # the drive-dressed rates stay complex, and Gamma avoids 1 and 1.5
    # where real decay rates collide
    tau = np.linspace(0.0, 12.0, 49)
    for Omega in np.logspace(-0.5, 1.5, 6):
        params = EmitterParams(1.0, CoherentDrive(Omega))
        for Gamma in np.logspace(-1, 1, 6):
            coeffs = filtered_g2_coherent_coefficients(params, Gamma)
            closed = coeffs.evaluate(tau)
            oracle = filtered_g2_oracle(params, Gamma, tau).values
            assert np.max(np.abs(closed - oracle)) < 1e-5
            zd = filtered_g2_coherent_zero_delay(params, Gamma)
            assert abs(coeffs.zero_delay - zd) < 1e-8


def test_c08_heitler_zero_delay_against_oracle():
    Omega = 1e-2
    zero = np.array([0.0])
    for Gamma in (0.3, 1.0, 3.0):
        # Richardson extrapolation removes the O(Omega^2) weak-drive bias
        # of the finite-amplitude oracle
        o1 = filtered_g2_oracle(
            EmitterParams(1.0, CoherentDrive(Omega)), Gamma, zero).values[0]
        o2 = filtered_g2_oracle(
            EmitterParams(1.0, CoherentDrive(Omega / 2.0)), Gamma,
            zero).values[0]
        extrapolated = (4.0 * o2 - o1) / 3.0
        formula = (1.0 / (1.0 + Gamma)) ** 2
        assert abs(formula - extrapolated) < 1e-5


def test_c09_mollow_filtering():
    Omega = 20.0
    params = EmitterParams(1.0, CoherentDrive(Omega))
    zero = np.array([0.0])
    for Gamma in (2.0, 5.0, 10.0):
        formula = 3.0 * (Gamma + 1.0) / (3.0 * Gamma + 1.0)
        oracle = filtered_g2_oracle(params, Gamma, zero).values[0]
        assert abs(formula - oracle) / oracle < 0.02
    table = max_bunching_scan(Omega_grid=np.logspace(0, 2, 9))
    supremum = float(np.max(table["g2_max"]))
    assert 2.9 <= supremum <= 3.0
    wide = filtered_g2_oracle(params, 1e3 * Omega, zero).values[0]
    assert wide < 1e-2


def test_c10_jitter_robustness_ordering():
    zero = [0.0]
    regimes = {
        "heitler": EmitterParams(1.0, CoherentDrive(1e-2)),
        "incoherent": INCO,
        "mollow": EmitterParams(1.0, CoherentDrive(2.0)),
    }
    for kind in KINDS:
        kernel = JitterKernel(kind=kind, Gamma=1.0,
                              convention="equal_variance")
        values = {name: float(jittered_g2_analytic(p, kernel, zero).values[0])
                  for name, p in regimes.items()}
        assert values["heitler"] < values["incoherent"] < values["mollow"]


def test_c11_engine_invariants():
    start = time.monotonic()
    # trace preservation along the Lindblad flow
    liou = build_liouvillian(SystemSpec(EmitterParams(1.0, CoherentDrive(2.0))))
    rho = np.array([[0.7, 0.1 + 0.05j], [0.1 - 0.05j, 0.3]])
    states = propagate(liou.matrix, rho.flatten(order="F"),
                       np.linspace(0.0, 20.0, 21))
    traces = states[:, 0] + states[:, 3]
    assert np.max(np.abs(traces - 1.0)) < 1e-9
    # vanishing-coupling invariance: halving epsilon leaves g2 unchanged
    params = EmitterParams(1.0, CoherentDrive(2.0))
    tau = np.linspace(0.0, 10.0, 21)
    eps = 1e-4
    a = filtered_g2_oracle(params, 1.0, tau, epsilon=eps).values
    b = filtered_g2_oracle(params, 1.0, tau, epsilon=eps / 2.0).values
    assert np.max(np.abs(a - b)) < 1e-6
    # sensor Fock-space truncation sufficiency
    c = filtered_g2_oracle(params, 1.0, tau, n_max=3).values
    assert np.max(np.abs(a - c)) < 1e-6
    # long-delay plateau of the filtered correlation
    plateau = filtered_g2_oracle(params, 1.0, np.array([50.0])).values[0]
    assert abs(plateau - 1.0) < 1e-5
    assert time.monotonic() - start < 120.0


def test_c12_validator_exit_codes(tmp_path, capsys):
    import json

    clean = cli_main(["validate", "--quick", "--out",
                      str(tmp_path / "clean.json")])
    capsys.readouterr()
    assert clean == 0
    fault = "filter.incoherent"
    code = cli_main(["validate", "--quick", "--fault", fault, "--out",
                     str(tmp_path / "fault.json")])
    err = capsys.readouterr().err
    assert code == 4
    report = json.loads((tmp_path / "fault.json").read_text())
    assert any(fault in name for name in
               [c["name"] for c in report["checks"] if not c["passed"]])
    assert fault in err
