import math

import numpy as np
import pytest

from antibunch.emitter import CorrelationCurve
from antibunch.noise import NoiseSpec, mix_noise, noise_dominated_limit, thermal_g2

TAU = np.linspace(0.0, 10.0, 50)


def perfect_signal():
    return CorrelationCurve(tau=TAU, values=np.zeros_like(TAU))


def test_coherent_noise_zero_delay_half_at_magic_ratio():
    spec = NoiseSpec(xi=math.sqrt(2.0) - 1.0, model="coherent")
    mixed = mix_noise(perfect_signal(), spec)
    assert mixed.values[0] == pytest.approx(0.5, abs=1e-12)


def test_coherent_noise_zero_delay_eight_ninths_at_xi_two():
    spec = NoiseSpec(xi=2.0, model="coherent")
    mixed = mix_noise(perfect_signal(), spec)
    assert mixed.values[0] == pytest.approx(8.0 / 9.0, abs=1e-12)


def test_thermal_noise_zero_delay_half_at_xi_third():
    spec = NoiseSpec(xi=1.0 / 3.0, model="thermal", gamma_n=1.0)
    mixed = mix_noise(perfect_signal(), spec)
    assert mixed.values[0] == pytest.approx(0.5, abs=1e-12)


def test_thermal_g2_shape():
    assert thermal_g2(np.array([0.0]), 2.0)[0] == pytest.approx(2.0)
    vals = thermal_g2(TAU, 2.0)
    assert np.allclose(vals, 1.0 + np.exp(-2.0 * TAU))


def test_zero_noise_is_identity():
    signal = CorrelationCurve(tau=TAU, values=1.0 - np.exp(-TAU))
    mixed = mix_noise(signal, NoiseSpec(xi=0.0, model="coherent"))
    assert np.allclose(mixed.values, signal.values, atol=1e-15)


def test_noise_dominated_limit_recovers_noise_statistics():
    spec = NoiseSpec(xi=1e6, model="thermal", gamma_n=0.7)
    limit = noise_dominated_limit(spec, xi_large=1e6, tau=TAU)
    assert np.max(np.abs(limit.values - thermal_g2(TAU, 0.7))) < 1e-4


def test_mix_preserves_plateau():
    signal = CorrelationCurve(tau=TAU, values=1.0 - np.exp(-2.0 * TAU))
    for model in ("coherent", "thermal"):
        mixed = mix_noise(signal, NoiseSpec(xi=0.8, model=model))
        assert mixed.values[-1] == pytest.approx(1.0, abs=1e-3)


def test_custom_noise_requires_curve_coverage():
    short = CorrelationCurve(tau=np.linspace(0.0, 1.0, 5),
                             values=np.ones(5))
    spec = NoiseSpec(xi=1.0, model="custom", curve=short)
    with pytest.raises(ValueError):
        spec.g2_on(TAU)


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        NoiseSpec(xi=-0.1, model="coherent")
    with pytest.raises(ValueError):
        NoiseSpec(xi=1.0, model="nonsense")
