"""Contamination of a photon stream by uncorrelated background light.

A signal with correlations g2(tau) mixed with an independent, non-interfering
noise field of relative intensity xi and correlations g2'(tau) produces

    g*2(tau) = [g2(tau) + xi^2 g2'(tau) + 2 xi] / (1 + xi)^2 .

The mixing acts pointwise on the correlation curve: it rescales the distance
to the Poissonian plateau without reshaping it, so coherence times survive
while the contrast degrades.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .emitter import CorrelationCurve

__all__ = ["NoiseSpec", "mix_noise", "noise_dominated_limit", "thermal_g2"]


def thermal_g2(tau: np.ndarray, gamma_n: float) -> np.ndarray:
    """Chaotic-light correlations 1 + exp(-gamma_n |tau|) (Siegert form)."""
    return 1.0 + np.exp(-gamma_n * np.abs(tau))


@dataclass(frozen=True)
class NoiseSpec:
    """Background light admixed to the signal.

    xi is the noise-to-signal intensity ratio.  The noise statistics are one
    of: "coherent" (g2' identically 1), "thermal" (Siegert profile with
    inverse coherence time gamma_n), or "custom" (an explicit curve,
    interpolated linearly onto the signal grid).
    """

    xi: float
    model: str = "coherent"
    gamma_n: float = 1.0
    curve: Optional[CorrelationCurve] = field(default=None)

    def __post_init__(self):
        if self.xi < 0:
            raise ValueError(f"noise-to-signal ratio must be >= 0, got {self.xi}")
        if self.model not in ("coherent", "thermal", "custom"):
            raise ValueError(f"unknown noise model {self.model!r}")
        if self.model == "thermal" and self.gamma_n <= 0:
            raise ValueError("thermal noise needs gamma_n > 0")
        if self.model == "custom" and self.curve is None:
            raise ValueError("custom noise model needs an explicit curve")

    def g2_on(self, tau: np.ndarray) -> np.ndarray:
        """Noise correlations g2'(tau) evaluated on the given delay grid."""
        tau = np.asarray(tau, dtype=float)
        if self.model == "coherent":
            return np.ones_like(tau)
        if self.model == "thermal":
            return thermal_g2(tau, self.gamma_n)
        lo, hi = self.curve.tau[0], self.curve.tau[-1]
        if tau.size and (tau[0] < lo - 1e-12 or tau[-1] > hi + 1e-12):
            raise ValueError(
                "custom noise curve does not cover the signal grid "
                f"[{tau[0]:g}, {tau[-1]:g}] (noise support [{lo:g}, {hi:g}])"
            )
        return np.interp(tau, self.curve.tau, self.curve.values)


def mix_noise(signal: CorrelationCurve, noise: NoiseSpec) -> CorrelationCurve:
    """Photon statistics of the signal contaminated by background light."""
    xi = noise.xi
    g2_noise = noise.g2_on(signal.tau)
    mixed = (signal.values + xi**2 * g2_noise + 2.0 * xi) / (1.0 + xi) ** 2
    return CorrelationCurve(
        tau=signal.tau,
        values=mixed,
        provenance=f"{signal.provenance}+noise[{noise.model},xi={xi:g}]",
    )


def noise_dominated_limit(noise: NoiseSpec, xi_large: float,
                          signal: Optional[CorrelationCurve] = None,
                          tau: Optional[np.ndarray] = None) -> CorrelationCurve:
    """Mixing outcome at overwhelming noise: g*2 converges to the noise g2'.

    Helper for the xi -> infinity limit; requires xi_large >= 1e3 so the
    1/xi corrections are below the documented 3e-4 envelope.
    """
    if xi_large < 1e3:
        raise ValueError("noise-dominated limit requires xi >= 1e3")
    if signal is None:
        if tau is None:
            raise ValueError("need a signal curve or a tau grid")
        tau = np.asarray(tau, dtype=float)
        signal = CorrelationCurve(tau=tau, values=np.zeros_like(tau),
                                  provenance="perfect-antibunching")
    strong = NoiseSpec(xi=xi_large, model=noise.model,
                       gamma_n=noise.gamma_n, curve=noise.curve)
    return mix_noise(signal, strong)
