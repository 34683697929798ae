"""Detector time-jitter acting on two-photon correlations.

Each detection time is smeared by a kernel density D(t).  For a stationary
signal the measured correlations are

    g2_jit(tau) = int_0^inf g2(theta) [C(tau - theta) + C(tau + theta)] dtheta

with C the autocorrelation of D.  Since every bare correlator here is a
constant-plus-exponentials, g2(theta) = 1 - sum_k B_k exp(-mu_k theta), the
convolution collapses to the master integral

    J(s, tau) = int_0^inf exp(-s theta) [C(tau - theta) + C(tau + theta)] dtheta

evaluated in closed form per kernel (see tools/derive_jitter.py), giving

    g2_jit(tau) = 1 - sum_k B_k J(mu_k, tau).

Four kernel families are supported: a rectangular window ("heaviside"), a
causal single exponential (memoryless dead time), a double-sided exponential
("laplace") and a Gaussian.  Two width conventions coexist: "equal_variance"
fixes the variance of every kernel to 1/Gamma^2 so that different shapes are
compared fairly, while "natural" uses the compact parametrization in which
the closed forms are simplest (window width 1/Gamma, Laplace rate 2*Gamma,
Gaussian variance 2/Gamma^2; the exponential kernel is identical in both).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import erfc, wofz

from . import numerics
from .emitter import (CorrelationCurve, EmitterParams, IncoherentDrive,
                      CoherentDrive, gamma_mollow)

__all__ = [
    "JitterKernel", "kernel_density", "kernel_autocorrelation",
    "master_integral", "exponential_modes", "jittered_g2_analytic",
    "jittered_g2_numeric", "jitter_robustness_scan",
]

KINDS = ("heaviside", "exponential", "laplace", "gaussian")
CONVENTIONS = ("equal_variance", "natural")


@dataclass(frozen=True)
class JitterKernel:
    """A detection-time smearing kernel of a given shape and width Gamma."""

    kind: str
    Gamma: float
    convention: str = "equal_variance"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.Gamma <= 0:
            raise ValueError("kernel width parameter Gamma must be > 0")

    @property
    def shape_parameter(self) -> float:
        """Kernel-specific scale: window width, decay rate, or std dev."""
        G = self.Gamma
        if self.kind == "heaviside":     # full window width
            return 2.0 * np.sqrt(3.0) / G if self.convention == "equal_variance" else 1.0 / G
        if self.kind == "exponential":   # decay rate (variance 1/G^2 always)
            return G
        if self.kind == "laplace":       # double-sided rate (variance 2/rate^2)
            return np.sqrt(2.0) * G if self.convention == "equal_variance" else 2.0 * G
        # gaussian: standard deviation
        return 1.0 / G if self.convention == "equal_variance" else np.sqrt(2.0) / G

    @property
    def variance(self) -> float:
        p = self.shape_parameter
        if self.kind == "heaviside":
            return p**2 / 12.0
        if self.kind in ("exponential",):
            return 1.0 / p**2
        if self.kind == "laplace":
            return 2.0 / p**2
        return p**2

    @property
    def mean_delay(self) -> float:
        """First moment of the kernel (nonzero only for the causal kernel)."""
        return 1.0 / self.Gamma if self.kind == "exponential" else 0.0


def kernel_density(kernel: JitterKernel, t) -> np.ndarray:
    """Kernel density D(t); zero outside the support where applicable."""
    t = np.asarray(t, dtype=float)
    p = kernel.shape_parameter
    if kernel.kind == "heaviside":
        return np.where(np.abs(t) < p / 2.0, 1.0 / p, 0.0)
    if kernel.kind == "exponential":
        return np.where(t >= 0.0, p * np.exp(-p * np.clip(t, 0.0, None)), 0.0)
    if kernel.kind == "laplace":
        return (p / 2.0) * np.exp(-p * np.abs(t))
    return np.exp(-t**2 / (2.0 * p**2)) / (p * np.sqrt(2.0 * np.pi))


def kernel_autocorrelation(kernel: JitterKernel, u) -> np.ndarray:
    """C(u) = int D(t) D(t+u) dt, an even function normalized to 1."""
    u = np.abs(np.asarray(u, dtype=float))
    p = kernel.shape_parameter
    if kernel.kind == "heaviside":
        return np.where(u < p, (1.0 - u / p) / p, 0.0)
    if kernel.kind == "exponential":
        return (p / 2.0) * np.exp(-p * u)
    if kernel.kind == "laplace":
        return (p / 4.0) * (1.0 + p * u) * np.exp(-p * u)
    return np.exp(-u**2 / (4.0 * p**2)) / (2.0 * p * np.sqrt(np.pi))


# ---------------------------------------------------------------------------
# master integral J(s, tau), closed form per kernel
# ---------------------------------------------------------------------------

def _expm1_ratio1(z):
    """(1 - exp(-z)) / z with a series fallback at small |z|."""
    z = np.asarray(z)
    small = np.abs(z) < 1e-5
    zs = np.where(small, 1.0, z)
    out = (1.0 - np.exp(-zs)) / zs
    series = 1.0 - z / 2.0 + z**2 / 6.0
    return np.where(small, series, out)


def _expm1_ratio2(z):
    """(1 - (1 + z) exp(-z)) / z^2 with a series fallback at small |z|."""
    z = np.asarray(z)
    small = np.abs(z) < 1e-4
    zs = np.where(small, 1.0, z)
    out = (1.0 - (1.0 + zs) * np.exp(-zs)) / zs**2
    series = 0.5 - z / 3.0 + z**2 / 8.0
    return np.where(small, series, out)


def _linexp_integral(a, b, c0, c1, s):
    """int_a^b (c0 + c1*theta) exp(-s*theta) dtheta, stable for small s(b-a)."""
    length = b - a
    z = s * length
    head = np.exp(-s * a)
    return head * length * ((c0 + c1 * a) * _expm1_ratio1(z)
                            + c1 * length * _expm1_ratio2(z))


def _master_heaviside(width: float, s, tau):
    tau = np.asarray(tau, dtype=float)
    w = width
    p0 = (1.0 - tau / w) / w
    q = 1.0 / w**2
    p1 = (1.0 + tau / w) / w
    lo = np.maximum(0.0, tau - w)
    j = (_linexp_integral(lo, tau, p0, q, s)
         + _linexp_integral(tau, tau + w, p1, -q, s))
    inside = tau < w
    j = j + np.where(inside,
                     _linexp_integral(0.0, np.maximum(w - tau, 0.0), p0, -q, s),
                     0.0)
    return j


def _master_exponential(rate: float, s, tau):
    tau = np.asarray(tau, dtype=float)
    r = rate
    if np.abs(r - s) < 1e-8 * r:
        return 0.5 * (1.0 + r * tau) * np.exp(-r * tau)
    return r * (r * np.exp(-s * tau) - s * np.exp(-r * tau)) / (r**2 - s**2)


def _master_laplace(rate: float, s, tau):
    tau = np.asarray(tau, dtype=float)
    b = rate
    if np.abs(b - s) < 1e-8 * b:
        # limit s -> b of the generic expression
        return np.exp(-b * tau) * (3.0 + 3.0 * b * tau + (b * tau) ** 2) / 8.0
    num = (2.0 * b**4 * np.exp(-s * tau)
           - b * s * (b**2 * (b * tau + 3.0) - s**2 * (b * tau + 1.0))
           * np.exp(-b * tau))
    return num / (2.0 * (b**2 - s**2) ** 2)


def _scaled_erfc(amplitude_log, z):
    """exp(amplitude_log) * erfc(z) without overflow.

    Uses the Faddeeva function for Re z >= 0, where
    exp(a) erfc(z) = exp(a - z^2) erfcx(z) and a - z^2 stays bounded here.
    """
    z = np.asarray(z, dtype=complex)
    amplitude_log = np.asarray(amplitude_log, dtype=complex)
    pos = z.real >= 0.0
    erfcx = wofz(1j * np.where(pos, z, 0.0))
    branch_pos = np.exp(amplitude_log - z**2) * erfcx
    branch_neg = (np.exp(np.where(pos, 0.0, amplitude_log))
                  * erfc(np.where(pos, 0.0, z)))
    return np.where(pos, branch_pos, branch_neg)


def _master_gaussian(sigma: float, s, tau):
    tau = np.asarray(tau, dtype=float)
    v = 2.0 * sigma**2                      # variance of the autocorrelation
    rt = np.sqrt(2.0 * v)
    a = s * s * v / 2.0
    term1 = _scaled_erfc(a - s * tau, (s * v - tau) / rt)
    term2 = _scaled_erfc(a + s * tau, (s * v + tau) / rt)
    return 0.5 * (term1 + term2)


def master_integral(kernel: JitterKernel, s, tau):
    """J(s, tau) = int_0^inf e^(-s theta)[C(tau-theta)+C(tau+theta)] dtheta.

    s may be complex (oscillatory signal modes); tau is a non-negative array.
    J(0, tau) = 1 identically by kernel normalization.
    """
    p = kernel.shape_parameter
    if kernel.kind == "heaviside":
        return _master_heaviside(p, s, tau)
    if kernel.kind == "exponential":
        return _master_exponential(p, s, tau)
    if kernel.kind == "laplace":
        return _master_laplace(p, s, tau)
    return _master_gaussian(p, s, tau)


# ---------------------------------------------------------------------------
# bare correlators as exponential modes, and the jittered curves
# ---------------------------------------------------------------------------

def exponential_modes(params: EmitterParams):
    """Decompose the bare g2 as 1 - sum_k B_k exp(-mu_k tau).

    Returns (amplitudes B_k, rates mu_k), possibly complex conjugate pairs
    in the strongly driven regime.
    """
    drive = params.drive
    if isinstance(drive, IncoherentDrive):
        return np.array([1.0 + 0j]), np.array([params.Gamma_sigma + 0j])
    if not isinstance(drive, CoherentDrive):
        raise TypeError(f"unsupported drive {drive!r}")
    g = params.gamma_sigma
    gm = gamma_mollow(params)
    if abs(gm) < 1e-12 * g:
        # confluent point 8*Omega = gamma: (1 +- 3)/2 amplitudes degenerate;
        # nudge to the resolvable side (the curve is continuous there)
        gm = 1e-10 * g
    mu = np.array([(3.0 * g - gm) / 4.0, (3.0 * g + gm) / 4.0])
    amp = np.array([(1.0 + 3.0 * g / gm) / 2.0, (1.0 - 3.0 * g / gm) / 2.0])
    return amp, mu


def jittered_g2_analytic(params: EmitterParams, kernel: JitterKernel,
                         tau) -> CorrelationCurve:
    """Closed-form jittered correlations for either drive type."""
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    amps, rates = exponential_modes(params)
    total = np.ones(len(tau), dtype=complex)
    for amp, rate in zip(amps, rates):
        total = total - amp * master_integral(kernel, rate, tau)
    residue = np.max(np.abs(total.imag))
    if residue > 1e-8:
        raise ArithmeticError(f"jittered curve has imaginary residue {residue:.2e}")
    return CorrelationCurve(tau=tau, values=total.real,
                            provenance=f"jitter-analytic[{kernel.kind}]")


def jittered_g2_numeric(bare: Callable[[np.ndarray], np.ndarray],
                        kernel: JitterKernel, tau,
                        decay_rate: float,
                        spec: numerics.QuadratureSpec | None = None
                        ) -> CorrelationCurve:
    """Quadrature oracle for the jitter convolution.

    `bare` evaluates g2(theta) for theta >= 0; `decay_rate` bounds its
    approach to the Poissonian plateau, used to truncate the integral.
    The plateau contribution is added exactly (J(0, tau) = 1), so only the
    decaying part g2 - 1 is integrated.
    """
    tau = np.atleast_1d(np.asarray(tau, dtype=float))
    spec = spec or numerics.QuadratureSpec()
    # effective decay of the integrand: the signal decays at decay_rate and
    # the kernel autocorrelation at its own scale; use the slower of the two
    p = kernel.shape_parameter
    kernel_rate = {"heaviside": np.inf, "exponential": p,
                   "laplace": p, "gaussian": 1.0 / p}[kernel.kind]
    eff_rate = decay_rate if np.isinf(kernel_rate) else min(decay_rate, kernel_rate)

    values = np.empty(len(tau))
    for i, t in enumerate(tau):
        def integrand(theta, t=t):
            corr = (kernel_autocorrelation(kernel, t - theta)
                    + kernel_autocorrelation(kernel, t + theta))
            return (bare(np.asarray([theta]))[0] - 1.0) * corr

        kinks = []
        if kernel.kind == "heaviside":
            kinks = sorted({abs(t - p), t, t + p, abs(p - t)})
        val = numerics.integrate_semi_infinite(integrand, eff_rate, spec,
                                               kinks=tuple(kinks))
        values[i] = 1.0 + val
    return CorrelationCurve(tau=tau, values=values,
                            provenance=f"jitter-quadrature[{kernel.kind}]")


def jitter_robustness_scan(regimes, kinds: Sequence[str], Gamma_grid,
                           convention: str = "equal_variance"):
    """Zero-delay correlations g2(0) versus kernel width for each regime.

    `regimes` maps a label to EmitterParams.  Returns a nested dict
    {kind: {label: array of g2(0) over Gamma_grid}}.
    """
    Gamma_grid = np.asarray(Gamma_grid, dtype=float)
    table = {}
    for kind in kinds:
        table[kind] = {}
        for label, params in regimes.items():
            vals = np.empty(len(Gamma_grid))
            for i, G in enumerate(Gamma_grid):
                kernel = JitterKernel(kind=kind, Gamma=G, convention=convention)
                vals[i] = jittered_g2_analytic(params, kernel, [0.0]).values[0]
            table[kind][label] = vals
    return table
