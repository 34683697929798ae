"""Two-level emitter model: driving parameters, bare photon correlations
and photon-statistics utilities.

The emitter is a two-level system (2LS) with decay rate gamma_sigma, driven
either incoherently (pump rate P_sigma) or coherently (amplitude Omega_sigma
at the laser frequency).  The bare second-order correlations g2(tau) have
closed forms in both cases; the coherent one is written with the complex
rate gamma_M = sqrt(gamma_sigma^2 - (8 Omega_sigma)^2) so a single
expression covers the monotonic (Heitler) and oscillatory (Mollow) regimes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

_IMAG_RESIDUE_TOL = 1e-8


@dataclass(frozen=True)
class IncoherentDrive:
    """Incoherent pumping at rate P_sigma (units of gamma_sigma)."""

    P_sigma: float

    def __post_init__(self):
        if self.P_sigma < 0:
            raise ValueError("P_sigma must be >= 0")


@dataclass(frozen=True)
class CoherentDrive:
    """Coherent driving with amplitude Omega_sigma and detuning Delta_sigma
    (laser-emitter detuning; the closed forms below assume resonance)."""

    Omega_sigma: float
    Delta_sigma: float = 0.0

    def __post_init__(self):
        if self.Omega_sigma < 0:
            raise ValueError("Omega_sigma must be >= 0")


Drive = Union[IncoherentDrive, CoherentDrive]


@dataclass(frozen=True)
class EmitterParams:
    """Rates and driving of the two-level emitter."""

    gamma_sigma: float
    drive: Drive
    omega_sigma: float = 0.0  # natural frequency; bookkeeping only

    def __post_init__(self):
        if self.gamma_sigma <= 0:
            raise ValueError("gamma_sigma must be > 0")

    @property
    def Gamma_sigma(self) -> float:
        """Effective (power-broadened) decay rate gamma_sigma + P_sigma."""
        pump = self.drive.P_sigma if isinstance(self.drive, IncoherentDrive) else 0.0
        return self.gamma_sigma + pump

    def normalized(self) -> "EmitterParams":
        """Same emitter with all rates expressed in units of gamma_sigma."""
        g = self.gamma_sigma
        if isinstance(self.drive, IncoherentDrive):
            drive = IncoherentDrive(self.drive.P_sigma / g)
        else:
            drive = CoherentDrive(self.drive.Omega_sigma / g,
                                  self.drive.Delta_sigma / g)
        return EmitterParams(1.0, drive, self.omega_sigma / g)


def gamma_mollow(params: EmitterParams) -> complex:
    """Complex Mollow rate sqrt(gamma_sigma^2 - (8 Omega_sigma)^2).

    Real below the oscillation threshold 8 Omega_sigma = gamma_sigma,
    purely imaginary above it.
    """
    if not isinstance(params.drive, CoherentDrive):
        raise ValueError("gamma_M is defined for coherent driving")
    g, w = params.gamma_sigma, params.drive.Omega_sigma
    return np.sqrt(complex(g * g - 64.0 * w * w))


def rabi_oscillation_rate(params: EmitterParams) -> complex:
    """Oscillation rate R_sigma = -i gamma_M, real in the Mollow regime.

    The jittered coherent closed forms are written in terms of R_sigma;
    using the complex continuation keeps them valid below threshold too.
    """
    return -1j * gamma_mollow(params)


@dataclass(frozen=True)
class CoherentDerivedRates:
    gamma_M: complex
    R_sigma: complex

    @classmethod
    def from_params(cls, params: EmitterParams) -> "CoherentDerivedRates":
        gm = gamma_mollow(params)
        return cls(gamma_M=gm, R_sigma=-1j * gm)


@dataclass(frozen=True)
class CorrelationCurve:
    """g2 samples on an ascending delay grid, tagged with their provenance."""

    tau: np.ndarray
    values: np.ndarray
    provenance: str = "analytic"

    def __post_init__(self):
        tau = np.asarray(self.tau, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if tau.ndim != 1 or values.shape != tau.shape:
            raise ValueError("tau and values must be matching 1-d arrays")
        if len(tau) > 1 and np.any(np.diff(tau) <= 0):
            raise ValueError("tau grid must be strictly ascending")
        if np.any(values < -1e-8):
            raise ValueError("correlations must be non-negative")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "values", np.maximum(values, 0.0))

    def at_zero(self) -> float:
        if self.tau[0] != 0.0:
            raise ValueError("curve does not include tau = 0")
        return float(self.values[0])


def tau_grid(tau_max: float, n_points: int = 200, log_fraction: float = 0.4,
             tau_min: float = 1e-4) -> np.ndarray:
    """Delay grid on [0, tau_max], log-dense near zero.

    A fraction of the points is placed geometrically between tau_min and
    tau_max/10 to resolve the short-delay structure of antibunched curves.
    """
    if tau_max <= 0 or n_points < 2:
        raise ValueError("need tau_max > 0 and at least two points")
    n_log = int(n_points * log_fraction)
    log_part = np.geomspace(tau_min, tau_max / 10.0, n_log) if n_log else []
    lin_part = np.linspace(0.0, tau_max, n_points - n_log)
    grid = np.unique(np.concatenate(([0.0], log_part, lin_part)))
    return grid


def g2_from_distribution(p) -> float:
    """Zero-delay g2 from a photon-number distribution p(0..n_max):
    sum n(n-1) p(n) / (sum n p(n))^2."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValueError("probabilities must sum to 1")
    n = np.arange(len(p))
    mean = float(n @ p)
    if mean <= 0:
        raise ValueError("g2 undefined for zero mean photon number")
    return float((n * (n - 1)) @ p) / mean**2


def fano_factor(p) -> float:
    """Fano factor (<n^2> - <n>^2) / <n> of a photon-number distribution."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValueError("probabilities must sum to 1")
    n = np.arange(len(p))
    mean = float(n @ p)
    if mean <= 0:
        raise ValueError("Fano factor undefined for zero mean photon number")
    var = float((n * n) @ p) - mean**2
    return var / mean


def classify(curve: CorrelationCurve) -> dict:
    """Antibunching (g2(0) < g2(tau) for all sampled tau > 0) and
    sub-Poissonian statistics (g2(0) < 1) flags.  The two conditions are
    logically independent and reported separately."""
    g0 = curve.at_zero()
    rest = curve.values[1:]
    return {
        "antibunched": bool(len(rest)) and bool(np.all(g0 < rest)),
        "sub_poissonian": bool(g0 < 1.0),
    }


def bare_g2_incoherent(params: EmitterParams, tau) -> CorrelationCurve:
    """g2(tau) = 1 - exp(-Gamma_sigma tau) for incoherent driving."""
    if not isinstance(params.drive, IncoherentDrive):
        raise ValueError("bare_g2_incoherent requires incoherent driving")
    tau = np.asarray(tau, dtype=float)
    values = 1.0 - np.exp(-params.Gamma_sigma * tau)
    return CorrelationCurve(tau, values, "analytic")


def _sinhc(z: np.ndarray) -> np.ndarray:
    """sinh(z)/z, stable at z = 0."""
    z = np.asarray(z, dtype=complex)
    out = np.ones_like(z)
    small = np.abs(z) < 1e-6
    zs = z[~small]
    out[~small] = np.sinh(zs) / zs
    out[small] = 1.0 + z[small] ** 2 / 6.0
    return out


def _check_real(values: np.ndarray, what: str) -> np.ndarray:
    residue = np.max(np.abs(values.imag)) if values.size else 0.0
    if residue > _IMAG_RESIDUE_TOL:
        raise ArithmeticError(f"{what}: imaginary residue {residue:.3e}")
    return values.real


def bare_g2_coherent(params: EmitterParams, tau) -> CorrelationCurve:
    """Resonant coherent-driving correlations,

        g2(tau) = 1 - e^(-3 gamma tau / 4) [cosh(gamma_M tau / 4)
                  + (3 gamma / gamma_M) sinh(gamma_M tau / 4)],

    evaluated with complex gamma_M (hyperbolic functions of an imaginary
    argument produce the Mollow oscillations above threshold)."""
    if not isinstance(params.drive, CoherentDrive):
        raise ValueError("bare_g2_coherent requires coherent driving")
    g = params.gamma_sigma
    gm = gamma_mollow(params)
    tau = np.asarray(tau, dtype=float)
    z = gm * tau / 4.0
    bracket = np.cosh(z) + 3.0 * g * (tau / 4.0) * _sinhc(z)
    values = 1.0 - np.exp(-3.0 * g * tau / 4.0) * bracket
    return CorrelationCurve(tau, _check_real(values, "bare_g2_coherent"), "analytic")


def bare_g2_heitler(params: EmitterParams, tau) -> CorrelationCurve:
    """Weak-driving limit g2(tau) = (1 - exp(-gamma_sigma tau / 2))^2."""
    tau = np.asarray(tau, dtype=float)
    values = (1.0 - np.exp(-params.gamma_sigma * tau / 2.0)) ** 2
    return CorrelationCurve(tau, values, "analytic")


def mollow_envelopes(params: EmitterParams, tau):
    """Exact lower/upper envelopes of the coherently driven g2(tau).

    The curve is 1 - sum_k B_k exp(-mu_k tau) over two (possibly complex
    conjugate) modes; the envelopes 1 -+ sum_k |B_k| exp(-Re(mu_k) tau)
    bound it by the triangle inequality.  In the strong-driving regime both
    modes decay at 3 gamma_sigma / 4 and the bound reduces to
    1 -+ sqrt(1 + 9 gamma_sigma^2/|gamma_M|^2) exp(-3 gamma_sigma tau / 4).
    Returns plain arrays (lower, upper); the lower envelope may be negative
    near tau = 0.
    """
    if not isinstance(params.drive, CoherentDrive):
        raise ValueError("mollow_envelopes requires coherent driving")
    tau = np.asarray(tau, dtype=float)
    g = params.gamma_sigma
    gm = gamma_mollow(params)
    if abs(gm) < 1e-12 * g:
        gm = 1e-10 * g
    amps = np.array([(1.0 + 3.0 * g / gm) / 2.0, (1.0 - 3.0 * g / gm) / 2.0])
    rates = np.array([(3.0 * g - gm) / 4.0, (3.0 * g + gm) / 4.0])
    env = np.zeros_like(tau)
    for amp, rate in zip(amps, rates):
        env = env + abs(amp) * np.exp(-rate.real * tau)
    return 1.0 - env, 1.0 + env
