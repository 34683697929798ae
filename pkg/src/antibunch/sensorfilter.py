"""Frequency-filtered photon correlations of a driven two-level emitter.

A Lorentzian detection filter of linewidth ``Gamma`` (HWHM ``Gamma/2``) is
modelled by weakly coupling the emitter to a bosonic sensor mode and reading
intensity correlations of the sensor population.  For a two-level system this
admits closed forms:

* incoherent pumping -- a three-exponential expression in ``Gamma_sigma`` and
  ``Gamma``;
* coherent (resonant) driving -- a seven-exponential expression whose rates
  and amplitudes are rational functions of ``Gamma``, ``Omega`` and the
  oscillation root ``sqrt(gamma**2 - 64*Omega**2)``, generated symbolically
  and stored in :mod:`antibunch._filtered_coeffs`;
* limiting regimes (Heitler, Mollow central peak, broadband and narrowband
  filters) with their own compact expressions.

Every closed form is cross-checked against the sensor-mode Liouvillian
oracle in :mod:`antibunch.liouvillian`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .emitter import (
    CoherentDrive,
    CorrelationCurve,
    EmitterParams,
    IncoherentDrive,
    gamma_mollow,
)

__all__ = [
    "FilteredCoefficients",
    "filtered_g2_incoherent",
    "filtered_g2_incoherent_zero_delay",
    "filtered_g2_incoherent_isoline",
    "filtered_g2_coherent_coefficients",
    "filtered_g2_coherent_general",
    "filtered_g2_coherent_zero_delay",
    "filtered_g2_heitler",
    "filtered_g2_mollow_central",
    "filtered_g2_mollow_narrowband",
    "filtered_g2_mollow_broadband",
    "max_bunching_scan",
]

_IMAG_TOL = 1e-8


# ---------------------------------------------------------------------------
# incoherent pumping
# ---------------------------------------------------------------------------

def filtered_g2_incoherent_zero_delay(params: EmitterParams, Gamma: float) -> float:
    """g2(0) of the filtered incoherently pumped emitter: 2*Gs / (Gs + 3*Gamma)."""
    _require_incoherent(params)
    Gs = params.Gamma_sigma
    return 2.0 * Gs / (Gs + 3.0 * Gamma)


def filtered_g2_incoherent(
    params: EmitterParams, Gamma: float, tau: np.ndarray
) -> CorrelationCurve:
    """Filtered g2(tau) for incoherent pumping (three-exponential closed form).

    The generic expression has a removable singularity at ``Gamma ==
    Gamma_sigma``; within a relative window of 1e-6 the analytic limit
    ``1 - (1/2 + Gs*tau/2 + Gs**2*tau**2/4) * exp(-Gs*tau)`` is used instead.
    """
    _require_incoherent(params)
    if Gamma <= 0.0:
        raise ValueError("filter linewidth Gamma must be positive")
    Gs = params.Gamma_sigma
    tau = np.asarray(tau, dtype=float)
    if abs(Gamma - Gs) < 1e-6 * Gs:
        x = Gs * tau
        values = 1.0 - (0.5 + 0.5 * x + 0.25 * x * x) * np.exp(-x)
    else:
        d2 = (Gs - Gamma) ** 2
        denom = d2 * (Gs + 3.0 * Gamma)
        a_sigma = (Gamma / (Gamma - Gs)) ** 2
        a_filter = Gs * (Gs**2 - 3.0 * Gamma * Gs - 2.0 * Gamma**2) / denom
        a_cross = 2.0 * Gs * Gamma * (5.0 * Gamma - Gs) / denom
        values = (
            1.0
            - a_sigma * np.exp(-Gs * tau)
            + a_filter * np.exp(-Gamma * tau)
            + a_cross * np.exp(-0.5 * (Gs + Gamma) * tau)
        )
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered incoherent (Gamma={Gamma:g})",
    )


def filtered_g2_incoherent_isoline(
    params: EmitterParams,
    Gamma: float,
    tau_max: float | None = None,
    n_grid: int = 4001,
) -> np.ndarray:
    """Delays at which the filtered incoherent g2(tau) crosses unity.

    Returns a (possibly empty) ascending array of crossing times in
    ``(0, tau_max)``; the asymptotic approach to the plateau does not count
    as a crossing.
    """
    _require_incoherent(params)
    Gs = params.Gamma_sigma
    if tau_max is None:
        tau_max = 30.0 / min(Gs, Gamma)
    grid = np.linspace(0.0, tau_max, n_grid)

    def residual(t: float) -> float:
        return float(filtered_g2_incoherent(params, Gamma, np.atleast_1d(t)).values[0]) - 1.0

    vals = filtered_g2_incoherent(params, Gamma, grid).values - 1.0
    crossings = []
    for i in range(len(grid) - 1):
        a, b = vals[i], vals[i + 1]
        if a == 0.0 and grid[i] > 0.0:
            crossings.append(grid[i])
        elif a * b < 0.0:
            crossings.append(optimize.brentq(residual, grid[i], grid[i + 1]))
    return np.asarray(crossings)


# ---------------------------------------------------------------------------
# coherent driving: general seven-exponential solution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FilteredCoefficients:
    """Exponential-mode decomposition of a filtered correlation function.

    ``g2(tau) = 1 + sum_k amplitudes[k] * exp(-rates[k] * tau)``; rates and
    amplitudes may come in complex-conjugate pairs (underdamped filtering),
    but the reconstructed correlation is real.
    """

    rates: np.ndarray
    amplitudes: np.ndarray
    zero_delay: float = field(init=False)

    def __post_init__(self) -> None:
        rates = np.asarray(self.rates, dtype=complex)
        amps = np.asarray(self.amplitudes, dtype=complex)
        if rates.shape != amps.shape or rates.ndim != 1:
            raise ValueError("rates and amplitudes must be matching 1-D arrays")
        total = complex(np.sum(amps))
        if abs(total.imag) > _IMAG_TOL * max(1.0, abs(total.real)):
            raise ValueError(
                f"amplitudes do not reconstruct a real correlation "
                f"(sum imag = {total.imag:.3e})"
            )
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "zero_delay", 1.0 + total.real)

    def evaluate(self, tau: np.ndarray) -> np.ndarray:
        tau = np.asarray(tau, dtype=float)
        acc = np.ones(tau.shape, dtype=complex)
        for amp, rate in zip(self.amplitudes, self.rates):
            acc = acc + amp * np.exp(-rate * tau)
        worst = float(np.max(np.abs(acc.imag))) if acc.size else 0.0
        if worst > _IMAG_TOL * max(1.0, float(np.max(np.abs(acc.real)))):
            raise ValueError(f"non-real reconstruction (max imag = {worst:.3e})")
        return acc.real


def filtered_g2_coherent_coefficients(
    params: EmitterParams, Gamma: float
) -> FilteredCoefficients:
    """Rates and amplitudes of the seven-exponential filtered-Mollow g2.

    Rates (in units of gamma, with gm = sqrt(1 - 64 W**2), W = Omega/gamma,
    G = Gamma/gamma)::

        (3 - gm)/4, (3 + gm)/4, G/2, (G + 1)/2,
        (2G + 3 - gm)/4, (2G + 3 + gm)/4, G

    Amplitudes are rational in (G, W, gm); they are generated symbolically
    from the sensor-mode moment hierarchy.  Raises ``ArithmeticError`` when
    the parameter point sits too close to a pole of the amplitude formulas
    (degenerate rates), in which case callers should fall back to the
    Liouvillian oracle.
    """
    drive = _require_coherent(params)
    if Gamma <= 0.0:
        raise ValueError("filter linewidth Gamma must be positive")
    from . import _filtered_coeffs

    g = params.gamma_sigma
    G = Gamma / g
    W = drive.Omega_sigma / g
    gm = cmath.sqrt(1.0 - 64.0 * W * W)
    pairs = _filtered_coeffs.terms(G, W, gm)
    amps = np.array([p[0] for p in pairs], dtype=complex)
    rates = np.array([p[1] for p in pairs], dtype=complex) * g
    if not np.all(np.isfinite(amps)) or np.max(np.abs(amps)) > 1e8:
        raise ArithmeticError(
            "degenerate filtered-correlation rates; use the Liouvillian oracle"
        )
    return FilteredCoefficients(rates=rates, amplitudes=amps)


def filtered_g2_coherent_general(
    params: EmitterParams,
    Gamma: float,
    tau: np.ndarray,
    fallback: bool = True,
) -> CorrelationCurve:
    """Filtered g2(tau) under resonant coherent driving.

    Uses the seven-exponential closed form; near degenerate rate
    configurations (where individual amplitudes diverge although their sum
    stays finite) it falls back to the sensor-mode Liouvillian oracle unless
    ``fallback=False``.
    """
    tau = np.asarray(tau, dtype=float)
    try:
        coeffs = filtered_g2_coherent_coefficients(params, Gamma)
        values = coeffs.evaluate(tau)
    except (ArithmeticError, ValueError):
        if not fallback:
            raise
        from .liouvillian import filtered_g2_oracle

        return filtered_g2_oracle(params, Gamma, tau)
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered coherent (Gamma={Gamma:g})",
    )


def filtered_g2_coherent_zero_delay(params: EmitterParams, Gamma: float) -> float:
    """Zero-delay filtered g2 under resonant coherent driving (closed form)."""
    drive = _require_coherent(params)
    g = params.gamma_sigma
    G, O = Gamma / g, drive.Omega_sigma / g
    O2 = O * O

    def gij(i: float, j: float) -> float:
        return i * G + j

    num = (
        gij(1, 1)
        * (gij(0, 1) ** 2 + 8.0 * O2)
        * (gij(1, 1) * gij(1, 2) + 16.0 * O2)
        * (
            gij(1, 1) * gij(2, 1) ** 2 * gij(3, 1) ** 2 * gij(1, 2) * gij(3, 2)
            + 8.0
            * gij(1, 0)
            * gij(3, 1)
            * (
                17.0 * gij(1, 0) ** 3
                + 29.0 * gij(1, 0) ** 2 * gij(0, 1)
                + 18.0 * gij(1, 0) * gij(0, 1) ** 2
                + 4.0 * gij(0, 1) ** 3
            )
            * O2
            + 192.0 * gij(1, 0) ** 2 * gij(2, 1) * O2 * O2
        )
    )
    den = (
        gij(2, 1)
        * gij(3, 1)
        * (gij(1, 1) * gij(2, 1) + 8.0 * O2)
        * (gij(3, 1) * gij(3, 2) + 16.0 * O2)
        * (gij(1, 1) ** 2 * gij(1, 2) + 8.0 * gij(1, 0) * O2) ** 2
    )
    return num / den


# ---------------------------------------------------------------------------
# limiting regimes
# ---------------------------------------------------------------------------

def filtered_g2_heitler(
    params: EmitterParams, Gamma: float, tau: np.ndarray
) -> CorrelationCurve:
    """Filtered g2(tau) in the Heitler (weak coherent driving) limit.

    Exact in the limit Omega -> 0; independent of Omega.  The removable
    singularity at ``Gamma == gamma`` is handled by its analytic limit.
    """
    _require_coherent(params)
    if Gamma <= 0.0:
        raise ValueError("filter linewidth Gamma must be positive")
    g = params.gamma_sigma
    tau = np.asarray(tau, dtype=float)
    if abs(Gamma - g) < 1e-6 * g:
        x = g * tau
        values = (
            np.exp(-1.5 * x)
            * (
                -8.0 * (x + 2.0) * np.exp(x)
                + (x * x + 4.0 * x + 4.0) * np.exp(0.5 * x)
                + 16.0 * np.exp(1.5 * x)
            )
            / 16.0
        )
    else:
        bracket = (
            Gamma**2 * np.exp(0.5 * Gamma * tau)
            - Gamma * g * np.exp(0.5 * g * tau)
            - (Gamma**2 - g**2) * np.exp(0.5 * (Gamma + g) * tau)
        )
        values = np.exp(-(Gamma + g) * tau) * bracket**2 / (Gamma**2 - g**2) ** 2
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered Heitler (Gamma={Gamma:g})",
    )


def filtered_g2_mollow_central(
    params: EmitterParams, Gamma: float, tau: np.ndarray
) -> CorrelationCurve:
    """g2(tau) of the filtered central Mollow peak (strong driving).

    Valid when the Rabi frequency dominates both linewidths so the filter
    isolates the central spectral line.  ``g2(0) = 3(Gamma+gamma)/(3Gamma+gamma)``.
    """
    _require_coherent(params)
    g = params.gamma_sigma
    tau = np.asarray(tau, dtype=float)
    denom = (Gamma - g) * (3.0 * Gamma + g)
    values = 1.0 + 2.0 * g * (
        2.0 * Gamma * np.exp(-0.5 * (Gamma + g) * tau)
        - (Gamma + g) * np.exp(-Gamma * tau)
    ) / denom
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered Mollow central peak (Gamma={Gamma:g})",
    )


def filtered_g2_mollow_narrowband(
    params: EmitterParams, Gamma: float, tau: np.ndarray
) -> CorrelationCurve:
    """Filtered Mollow g2(tau) for a filter much narrower than all other rates.

    Expansion to leading orders in Gamma; the correlation develops bunching
    with thermal-like decay at the filter linewidth.
    """
    drive = _require_coherent(params)
    g = params.gamma_sigma
    O = drive.Omega_sigma
    tau = np.asarray(tau, dtype=float)
    O2, O4 = O * O, O**4
    amp_half = 2.0 * g * g / O2 + 4.0 * Gamma * (2.0 * Gamma - g) / g**2
    amp_full = (
        3.0 * g**8
        - 8.0 * Gamma * g**4 * (Gamma + g) * O2
        + 16.0 * Gamma**2 * (Gamma * (5.0 * Gamma - g) + g**2) * O4
    ) / (8.0 * Gamma**2 * g**2 * O4)
    values = (
        1.0
        + amp_half * np.exp(-0.5 * (Gamma + g) * tau)
        + amp_full * np.exp(-Gamma * tau)
    )
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered Mollow, narrowband (Gamma={Gamma:g})",
    )


def filtered_g2_mollow_narrowband_zero_delay(
    params: EmitterParams, Gamma: float
) -> float:
    """Zero-delay filtered Mollow g2 in the narrow-filter expansion."""
    drive = _require_coherent(params)
    g = params.gamma_sigma
    O2 = drive.Omega_sigma**2
    G = Gamma
    num = (
        (4.0 * G + g) * g**9
        + 12.0 * G * (2.0 * G + g) * g**6 * O2
        - 16.0 * G**2 * g**3 * (14.0 * G - 5.0 * g) * O2 * O2
        - 192.0 * G**3 * (2.0 * G - g) * O2**3
    )
    return num / (g * (g**3 + 4.0 * G * O2) ** 3)


def filtered_g2_mollow_broadband(
    params: EmitterParams, Gamma: float, tau: np.ndarray
) -> CorrelationCurve:
    """Filtered Mollow g2(tau) for a broad filter (Gamma >> Omega >> gamma).

    With x = Gamma/Omega the Rabi oscillations at 2*Omega reappear, damped at
    the filter rate; as x -> infinity the bare strong-driving correlation is
    recovered.  ``g2(0) = 8(2+x^2)(16+x^2) / ((4+x^2)(8+x^2)^2)``.
    """
    drive = _require_coherent(params)
    g = params.gamma_sigma
    O = drive.Omega_sigma
    tau = np.asarray(tau, dtype=float)
    x = Gamma / O
    x2 = x * x
    d = (4.0 + x2) * (8.0 + x2) ** 2
    c = np.cos(2.0 * O * tau)
    s = np.sin(2.0 * O * tau)
    values = (
        1.0
        + 8.0 * x2 * (10.0 + x2) / d * np.exp(-Gamma * tau)
        - 4.0 * x2 * (16.0 + x2) / d * np.exp(-0.5 * (g + Gamma) * tau)
        + 4.0
        * x2
        * ((16.0 + x2) * c + x * (10.0 + x2) * s)
        / d
        * np.exp(-0.25 * (3.0 * g + 2.0 * Gamma) * tau)
        - x2 * (16.0 + x2) / (8.0 + x2) ** 2 * c * np.exp(-0.75 * g * tau)
    )
    return CorrelationCurve(
        tau=tau,
        values=values,
        provenance=f"filtered Mollow, broadband (Gamma={Gamma:g})",
    )


def filtered_g2_mollow_broadband_zero_delay(
    params: EmitterParams, Gamma: float
) -> float:
    """Zero-delay filtered Mollow g2 in the broad-filter expansion."""
    drive = _require_coherent(params)
    x2 = (Gamma / drive.Omega_sigma) ** 2
    return 8.0 * (2.0 + x2) * (16.0 + x2) / ((4.0 + x2) * (8.0 + x2) ** 2)


# ---------------------------------------------------------------------------
# bunching survey
# ---------------------------------------------------------------------------

def max_bunching_scan(
    gamma: float = 1.0,
    Omega_grid: np.ndarray | None = None,
    Gamma_bounds: tuple[float, float] = (1e-4, 1e4),
    n_coarse: int = 121,
) -> dict[str, np.ndarray]:
    """Maximum zero-delay bunching of the filtered coherent emitter.

    For each drive strength the zero-delay correlation is maximized over the
    filter linewidth (coarse log-grid scan refined by bounded minimization).
    Returns arrays ``Omega``, ``Gamma_opt`` and ``g2_max``; the supremum of
    ``g2_max`` over strong driving approaches 3.
    """
    if Omega_grid is None:
        Omega_grid = np.logspace(-2, 2, 41) * gamma
    Omega_grid = np.asarray(Omega_grid, dtype=float)
    lo, hi = math.log10(Gamma_bounds[0] * gamma), math.log10(Gamma_bounds[1] * gamma)
    coarse = np.logspace(lo, hi, n_coarse)
    Gamma_opt = np.empty_like(Omega_grid)
    g2_max = np.empty_like(Omega_grid)
    for i, Om in enumerate(Omega_grid):
        params = EmitterParams(gamma, CoherentDrive(Om))

        def neg(logG: float) -> float:
            return -filtered_g2_coherent_zero_delay(params, 10.0**logG)

        vals = np.array([filtered_g2_coherent_zero_delay(params, G) for G in coarse])
        k = int(np.argmax(vals))
        a = math.log10(coarse[max(k - 1, 0)])
        b = math.log10(coarse[min(k + 1, len(coarse) - 1)])
        res = optimize.minimize_scalar(neg, bounds=(a, b), method="bounded")
        Gamma_opt[i] = 10.0**res.x
        g2_max[i] = -res.fun
    return {"Omega": Omega_grid, "Gamma_opt": Gamma_opt, "g2_max": g2_max}


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _require_incoherent(params: EmitterParams) -> IncoherentDrive:
    if not isinstance(params.drive, IncoherentDrive):
        raise TypeError("this filtered correlation requires incoherent pumping")
    return params.drive


def _require_coherent(params: EmitterParams) -> CoherentDrive:
    if not isinstance(params.drive, CoherentDrive):
        raise TypeError("this filtered correlation requires coherent driving")
    return params.drive
