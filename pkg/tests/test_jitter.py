import numpy as np
import pytest
from scipy import integrate

from antibunch.emitter import (
    CoherentDrive,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_incoherent,
)
from antibunch.jitter import (
    JitterKernel,
    jitter_robustness_scan,
    jittered_g2_analytic,
    jittered_g2_numeric,
    kernel_autocorrelation,
    kernel_density,
    master_integral,
)

KINDS = ("heaviside", "exponential", "laplace", "gaussian")
TAU = np.linspace(0.0, 8.0, 9)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("convention", ("equal_variance", "natural"))
def test_kernel_normalization_and_variance(kind, convention):
    kernel = JitterKernel(kind=kind, Gamma=1.3, convention=convention)
    p = kernel.shape_parameter
    hi = {"heaviside": p, "exponential": 50.0 / p,
          "laplace": 50.0 / p, "gaussian": 12.0 * p}[kind]
    lo = 0.0 if kind == "exponential" else -hi  # only the causal kernel is one-sided
    norm, _ = integrate.quad(
        lambda t: kernel_density(kernel, np.array([t]))[0], lo, hi, limit=200)
    assert norm == pytest.approx(1.0, abs=1e-9)
    var, _ = integrate.quad(
        lambda t: (t - kernel.mean_delay) ** 2
        * kernel_density(kernel, np.array([t]))[0], lo, hi, limit=200)
    assert var == pytest.approx(kernel.variance, abs=1e-8)
    if convention == "equal_variance":
        assert kernel.variance == pytest.approx(1.0 / 1.3**2, rel=1e-12)


@pytest.mark.parametrize("kind", KINDS)
def test_autocorrelation_normalization(kind):
    kernel = JitterKernel(kind=kind, Gamma=0.8)
    p = kernel.shape_parameter
    hi = {"heaviside": p, "exponential": 60.0 / p,
          "laplace": 60.0 / p, "gaussian": 12.0 * p}[kind]
    total, _ = integrate.quad(
        lambda u: kernel_autocorrelation(kernel, np.array([u]))[0],
        -hi, hi, limit=400)
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("kind", KINDS)
def test_master_integral_at_zero_rate_is_unity(kind):
    kernel = JitterKernel(kind=kind, Gamma=1.7)
    vals = master_integral(kernel, 1e-14, TAU)
    assert np.max(np.abs(vals - 1.0)) < 1e-9


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("drive", ("incoherent", "coherent"))
def test_analytic_matches_quadrature(kind, drive):
    if drive == "incoherent":
        params = EmitterParams(1.0, IncoherentDrive(1.0))
        bare = lambda th: bare_g2_incoherent(params, th).values
        decay = params.Gamma_sigma
    else:
        params = EmitterParams(1.0, CoherentDrive(2.0))
        bare = lambda th: bare_g2_coherent(params, th).values
        decay = 0.75
    kernel = JitterKernel(kind=kind, Gamma=1.5)
    analytic = jittered_g2_analytic(params, kernel, TAU).values
    numeric = jittered_g2_numeric(bare, kernel, TAU, decay).values
    assert np.max(np.abs(analytic - numeric)) < 1e-8


def test_sharp_kernel_recovers_bare_curve():
    params = EmitterParams(1.0, IncoherentDrive(1.0))
    bare = bare_g2_incoherent(params, TAU).values
    for kind in KINDS:
        kernel = JitterKernel(kind=kind, Gamma=1e3)
        jit = jittered_g2_analytic(params, kernel, TAU).values
        assert np.max(np.abs(jit - bare)) < 1e-2


def test_broad_kernel_randomizes_correlations():
    params = EmitterParams(1.0, IncoherentDrive(1.0))
    for kind in KINDS:
        kernel = JitterKernel(kind=kind, Gamma=1e-2)
        jit = jittered_g2_analytic(params, kernel, TAU).values
        assert np.max(np.abs(jit - 1.0)) < 1e-2


def test_exponential_jitter_zero_delay_closed_form():
    # one-sided exponential kernel of rate Gamma on the incoherent curve:
    # g2(0) = Gamma_sigma / (Gamma_sigma + Gamma)
    params = EmitterParams(1.0, IncoherentDrive(0.0))
    kernel = JitterKernel(kind="exponential", Gamma=1.0)
    val = jittered_g2_analytic(params, kernel, [0.0]).values[0]
    assert val == pytest.approx(0.5, abs=1e-12)


def test_confluent_drive_point_is_finite():
    # 8 Omega = gamma makes the two coherent modes degenerate
    params = EmitterParams(1.0, CoherentDrive(0.125))
    kernel = JitterKernel(kind="gaussian", Gamma=1.0)
    vals = jittered_g2_analytic(params, kernel, TAU).values
    assert np.all(np.isfinite(vals))


def test_robustness_scan_shape():
    regimes = {
        "incoherent": EmitterParams(1.0, IncoherentDrive(1.0)),
        "mollow": EmitterParams(1.0, CoherentDrive(2.0)),
    }
    grid = np.array([0.5, 1.0, 2.0])
    table = jitter_robustness_scan(regimes, ("exponential",), grid)
    assert set(table) == {"exponential"}
    assert len(table["exponential"]["mollow"]) == 3


def test_invalid_kernel_rejected():
    with pytest.raises(ValueError):
        JitterKernel(kind="box", Gamma=1.0)
    with pytest.raises(ValueError):
        JitterKernel(kind="gaussian", Gamma=-1.0)
