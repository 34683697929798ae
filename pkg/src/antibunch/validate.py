"""Self-validation: every closed form against an independent numerical oracle.

The validator recomputes each analytic result shipped by the package and
compares it with quadrature or Liouvillian-regression oracles, producing a
machine-readable report.  A fault-injection hook perturbs one named formula
at a time, which is how the validator itself is tested: a clean build must
pass every check, and an injected fault must be caught and attributed to the
offending formula.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import integrate

from . import jitter as jt
from . import noise as ns
from . import sensorfilter as sfilt
from .emitter import (
    CoherentDrive,
    CorrelationCurve,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_heitler,
    bare_g2_incoherent,
)
from .liouvillian import SensorSpec, SystemSpec, build_liouvillian, filtered_g2_oracle, g2_tau

__all__ = ["CheckResult", "ValidationReport", "FAULT_TARGETS", "run_validation"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    detail: str = ""


@dataclass
class ValidationReport:
    passed: bool
    checks: list[CheckResult]
    formulas: dict[str, list[str]]
    conventions: dict[str, str]
    discrepancies: list[str]
    degenerate_points: list[str]
    fault_injected: str | None
    elapsed_seconds: float

    def to_dict(self) -> dict:
        out = asdict(self)
        return out

    def failed_names(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


#: Checks that accept fault injection (``run_validation(fault=name)``).
FAULT_TARGETS = (
    "bare.incoherent",
    "bare.coherent",
    "noise.fixed_points",
    "jitter.heaviside",
    "jitter.exponential",
    "jitter.laplace",
    "jitter.gaussian",
    "filter.incoherent",
    "filter.coherent_zero_delay",
    "filter.coherent_general",
    "filter.heitler",
    "filter.mollow_limits",
)

#: Written by the validator, never by the physics modules: notes on
#: normalization choices resolved against the oracles.
_CONVENTIONS = {
    "kernel_width": (
        "jitter kernels carry two width conventions: 'equal_variance' fixes "
        "the variance of every kernel to 1/Gamma^2; 'natural' uses each "
        "kernel's conventional shape parameter (heaviside window 1/Gamma, "
        "two-sided-exponential rate 2*Gamma, gaussian std sqrt(2)/Gamma; the "
        "one-sided exponential has rate Gamma in both)."
    ),
    "drive_amplitude": (
        "the filtered-correlation rational functions are expressed with "
        "8*Omega^2 terms; a common alternative normalization (Omega' = "
        "sqrt(2)*Omega) writes the same expressions with 4*Omega'^2.  The "
        "shipped normalization is the one whose weak-drive excited-state "
        "population is 4*Omega^2/gamma^2, as validated against the sensor "
        "oracle over Omega/gamma in [1e-2, 20]."
    ),
    "mollow_root": (
        "the coherent-drive correlation is written with hyperbolic "
        "cosh/sinh of the complex root sqrt(gamma^2 - 64*Omega^2)/4, which "
        "reduces to damped cos/sin beyond 8*Omega = gamma."
    ),
}

#: Closed forms covered by the suite, for coverage accounting.
_FORMULAS = {
    "bare": [
        "bare.incoherent.tau",
        "bare.coherent.tau",
        "bare.heitler.tau",
    ],
    "noise": ["noise.mixing.zero_delay"],
    "jitter": [
        f"jitter.{kind}.{drive}"
        for kind in ("heaviside", "exponential", "laplace", "gaussian")
        for drive in ("incoherent", "coherent")
    ],
    "filter": [
        "filter.incoherent.tau",
        "filter.incoherent.zero_delay",
        "filter.coherent.seven_exponential",
        "filter.coherent.zero_delay",
        "filter.heitler.tau",
        "filter.mollow.central_peak",
        "filter.mollow.narrowband",
        "filter.mollow.broadband",
    ],
}

_DISCREPANCIES = [
    "filtered coherent zero-delay: transcriptions using the alternative "
    "drive normalization (4*Omega^2 / 48*Omega^4 coefficients) deviate from "
    "the sensor oracle by O(1) at Omega ~ gamma; the shipped 8*Omega^2 / "
    "192*Omega^4 form agrees to better than 1e-7.",
    "weak-drive Heitler checks compare against a Richardson extrapolation "
    "of the oracle in Omega (runs at Omega and Omega/2), removing the "
    "O(Omega^2) finite-drive bias that would otherwise exceed tight "
    "tolerances at Omega = 1e-2*gamma.",
]


def _perturb(values: np.ndarray, name: str, fault: str | None,
             scale: float) -> np.ndarray:
    """Fault-injection hook: corrupt the analytic side of one named check."""
    if fault != name:
        return values
    return values + scale


def run_validation(fault: str | None = None, quick: bool = False) -> ValidationReport:
    """Run the full analytic-vs-oracle suite.

    ``fault`` names one formula (see :data:`FAULT_TARGETS`) whose analytic
    output is perturbed before comparison; the corresponding check must then
    fail.  ``quick`` trims parameter grids for fast smoke runs.
    """
    if fault is not None and fault not in FAULT_TARGETS:
        raise ValueError(
            f"unknown fault target {fault!r}; choose one of {', '.join(FAULT_TARGETS)}"
        )
    t0 = time.perf_counter()
    checks: list[CheckResult] = []

    checks.append(_check_bare_incoherent(fault))
    checks.append(_check_bare_coherent(fault))
    checks.append(_check_noise_fixed_points(fault))
    checks.append(_check_kernel_normalization())
    for kind in ("heaviside", "exponential", "laplace", "gaussian"):
        checks.append(_check_jitter_kind(kind, fault, quick))
    checks.append(_check_filter_incoherent(fault, quick))
    checks.append(_check_filter_coherent_zero_delay(fault, quick))
    degenerate: list[str] = []
    checks.append(_check_filter_coherent_general(fault, quick, degenerate))
    checks.append(_check_filter_heitler(fault, quick))
    checks.append(_check_filter_mollow_limits(fault))
    checks.append(_check_engine_invariants(quick))

    elapsed = time.perf_counter() - t0
    return ValidationReport(
        passed=all(c.passed for c in checks),
        checks=checks,
        formulas={k: list(v) for k, v in _FORMULAS.items()},
        conventions=dict(_CONVENTIONS),
        discrepancies=list(_DISCREPANCIES),
        degenerate_points=degenerate,
        fault_injected=fault,
        elapsed_seconds=elapsed,
    )


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _result(name: str, dev: float, tol: float, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(dev <= tol),
                       max_deviation=float(dev), tolerance=float(tol),
                       detail=detail)


def _check_bare_incoherent(fault: str | None) -> CheckResult:
    name = "bare.incoherent"
    tau = np.linspace(0.0, 10.0, 41)
    dev = 0.0
    for P in (0.2, 1.0, 3.0):
        params = EmitterParams(1.0, IncoherentDrive(P))
        analytic = _perturb(bare_g2_incoherent(params, tau).values, name, fault, 1e-3)
        liou = build_liouvillian(SystemSpec(params))
        oracle = g2_tau(liou, "sigma", tau).values
        dev = max(dev, float(np.max(np.abs(analytic - oracle))))
    return _result(name, dev, 1e-9,
                   "1 - exp(-Gamma_sigma*tau) vs Liouvillian regression")


def _check_bare_coherent(fault: str | None) -> CheckResult:
    name = "bare.coherent"
    tau = np.linspace(0.0, 10.0, 41)
    dev = 0.0
    for Om in (0.05, 0.125, 0.5, 3.0):
        params = EmitterParams(1.0, CoherentDrive(Om))
        analytic = _perturb(bare_g2_coherent(params, tau).values, name, fault, 1e-3)
        liou = build_liouvillian(SystemSpec(params))
        oracle = g2_tau(liou, "sigma", tau).values
        dev = max(dev, float(np.max(np.abs(analytic - oracle))))
    return _result(name, dev, 1e-9,
                   "hyperbolic closed form vs Liouvillian regression, both "
                   "monotonic and oscillatory regimes")


def _check_noise_fixed_points(fault: str | None) -> CheckResult:
    name = "noise.fixed_points"
    tau = np.array([0.0, 1.0])
    signal = CorrelationCurve(tau=tau, values=np.zeros(2))  # ideal antibuncher

    cases = [
        (ns.NoiseSpec(xi=math.sqrt(2.0) - 1.0, model="coherent"), 0.5),
        (ns.NoiseSpec(xi=2.0, model="coherent"), 8.0 / 9.0),
        (ns.NoiseSpec(xi=1.0 / 3.0, model="thermal", gamma_n=1.0), 0.5),
    ]
    dev = 0.0
    for spec, expected in cases:
        mixed = ns.mix_noise(signal, spec).values[0]
        mixed = float(_perturb(np.asarray([mixed]), name, fault, 1e-3)[0])
        dev = max(dev, abs(mixed - expected))
    return _result(name, dev, 1e-9,
                   "zero-delay contamination fixed points (coherent and "
                   "thermal noise)")


def _check_kernel_normalization() -> CheckResult:
    name = "jitter.kernel_normalization"
    dev = 0.0
    for kind in ("heaviside", "exponential", "laplace", "gaussian"):
        for convention in ("equal_variance", "natural"):
            for Gamma in (0.5, 2.0):
                kernel = jt.JitterKernel(kind=kind, Gamma=Gamma,
                                         convention=convention)
                p = kernel.shape_parameter
                hi = {"heaviside": p, "exponential": 60.0 / p,
                      "laplace": 60.0 / p, "gaussian": 12.0 * p}[kind]
                lo = 0.0 if kind == "exponential" else -hi
                norm, _ = integrate.quad(
                    lambda t: kernel_val(kernel, t), lo, hi, limit=200)
                var, _ = integrate.quad(
                    lambda t: (t - kernel.mean_delay) ** 2 * kernel_val(kernel, t),
                    lo, hi, limit=200)
                dev = max(dev, abs(norm - 1.0))
                if convention == "equal_variance":
                    dev = max(dev, abs(var - 1.0 / Gamma**2))
                else:
                    dev = max(dev, abs(var - kernel.variance))
    return _result(name, dev, 1e-6,
                   "kernel densities integrate to one; variances match the "
                   "declared convention (by quadrature)")


def kernel_val(kernel: jt.JitterKernel, t: float) -> float:
    return float(jt.kernel_density(kernel, np.asarray([t]))[0])


def _check_jitter_kind(kind: str, fault: str | None, quick: bool) -> CheckResult:
    name = f"jitter.{kind}"
    tau = np.linspace(0.0, 8.0, 9 if quick else 17)
    Gammas = (1.0,) if quick else (0.5, 2.0)
    regimes = {
        "incoherent": EmitterParams(1.0, IncoherentDrive(1.0)),
        "coherent": EmitterParams(1.0, CoherentDrive(2.0)),
    }
    dev = 0.0
    for Gamma in Gammas:
        kernel = jt.JitterKernel(kind=kind, Gamma=Gamma)
        for label, params in regimes.items():
            analytic = _perturb(
                jt.jittered_g2_analytic(params, kernel, tau).values,
                name, fault, 1e-3)
            if isinstance(params.drive, IncoherentDrive):
                bare = lambda th, p=params: bare_g2_incoherent(p, th).values
                decay = params.Gamma_sigma
            else:
                bare = lambda th, p=params: bare_g2_coherent(p, th).values
                decay = 0.75 * params.gamma_sigma
            oracle = jt.jittered_g2_numeric(bare, kernel, tau, decay).values
            dev = max(dev, float(np.max(np.abs(analytic - oracle))))
    return _result(name, dev, 1e-5,
                   f"{kind} time-jitter closed forms vs quadrature "
                   "convolution, both drives")


def _check_filter_incoherent(fault: str | None, quick: bool) -> CheckResult:
    name = "filter.incoherent"
    tau = np.linspace(0.0, 8.0, 9 if quick else 25)
    params = EmitterParams(1.0, IncoherentDrive(1.0))
    dev = 0.0
    for Gamma in ((0.7,) if quick else (0.3, 0.7, 2.0, params.Gamma_sigma)):
        analytic = _perturb(
            sfilt.filtered_g2_incoherent(params, Gamma, tau).values,
            name, fault, 1e-3)
        oracle = filtered_g2_oracle(params, Gamma, tau).values
        dev = max(dev, float(np.max(np.abs(analytic - oracle))))
        zd = sfilt.filtered_g2_incoherent_zero_delay(params, Gamma)
        dev = max(dev, abs(analytic[0] - zd))
    return _result(name, dev, 1e-5,
                   "three-exponential filtered incoherent form vs sensor "
                   "oracle, including the equal-rate limit")


def _check_filter_coherent_zero_delay(fault: str | None, quick: bool) -> CheckResult:
    name = "filter.coherent_zero_delay"
    points = [(0.05, 0.7), (1.0, 0.3), (20.0, 2.0)]
    if not quick:
        points += [(0.5, 2.0), (5.0, 10.0), (0.125, 1.0)]
    dev = 0.0
    for Om, Gamma in points:
        params = EmitterParams(1.0, CoherentDrive(Om))
        zd = sfilt.filtered_g2_coherent_zero_delay(params, Gamma)
        zd = float(_perturb(np.asarray([zd]), name, fault, 1e-3)[0])
        oracle = filtered_g2_oracle(params, Gamma, np.asarray([0.0])).values[0]
        dev = max(dev, abs(zd - oracle))
    return _result(name, dev, 1e-5,
                   "rational zero-delay expression vs sensor oracle across "
                   "drive and filter regimes")


def _check_filter_coherent_general(fault: str | None, quick: bool,
                                   degenerate: list[str]) -> CheckResult:
    name = "filter.coherent_general"
    tau = np.linspace(0.0, 8.0, 9 if quick else 17)
    Oms = (0.5, 5.0) if quick else (0.05, 0.5, 2.0, 20.0)
    Gammas = (0.7, 3.0) if quick else (0.3, 0.7, 3.0, 10.0)
    dev = 0.0
    sum_dev = 0.0
    for Om in Oms:
        params = EmitterParams(1.0, CoherentDrive(Om))
        for Gamma in Gammas:
            try:
                coeffs = sfilt.filtered_g2_coherent_coefficients(params, Gamma)
            except ArithmeticError:
                # degenerate rates: served by the oracle fallback at runtime
                degenerate.append(f"Omega={Om}, Gamma={Gamma}")
                continue
            analytic = _perturb(coeffs.evaluate(tau), name, fault, 1e-3)
            oracle = filtered_g2_oracle(params, Gamma, tau).values
            dev = max(dev, float(np.max(np.abs(analytic - oracle))))
            zd = sfilt.filtered_g2_coherent_zero_delay(params, Gamma)
            sum_dev = max(sum_dev, abs(coeffs.zero_delay - zd))
    detail = ("seven-exponential filtered coherent form vs sensor oracle; "
              f"amplitude-sum vs zero-delay consistency {sum_dev:.2e}")
    dev = max(dev, 0.0 if sum_dev <= 1e-8 else sum_dev)
    return _result(name, dev, 1e-5, detail)


def _check_filter_heitler(fault: str | None, quick: bool) -> CheckResult:
    name = "filter.heitler"
    tau = np.linspace(0.0, 8.0, 9 if quick else 17)
    dev = 0.0
    for Gamma in ((1.0,) if quick else (0.3, 1.0, 3.0)):
        p1 = EmitterParams(1.0, CoherentDrive(1e-2))
        p2 = EmitterParams(1.0, CoherentDrive(5e-3))
        analytic = _perturb(
            sfilt.filtered_g2_heitler(p1, Gamma, tau).values, name, fault, 1e-3)
        o1 = filtered_g2_oracle(p1, Gamma, tau).values
        o2 = filtered_g2_oracle(p2, Gamma, tau).values
        richardson = (4.0 * o2 - o1) / 3.0
        dev = max(dev, float(np.max(np.abs(analytic - richardson))))
    return _result(name, dev, 1e-5,
                   "weak-drive filtered form vs Richardson-extrapolated "
                   "oracle (removes O(Omega^2) finite-drive bias)")


def _check_filter_mollow_limits(fault: str | None) -> CheckResult:
    name = "filter.mollow_limits"
    params = EmitterParams(1.0, CoherentDrive(20.0))
    dev = 0.0
    details = []

    # central spectral peak: zero-delay formula vs oracle, moderate filters
    for Gamma in (2.0, 5.0, 10.0):
        analytic = sfilt.filtered_g2_mollow_central(
            params, Gamma, np.asarray([0.0])).values[0]
        analytic = float(_perturb(np.asarray([analytic]), name, fault, 0.1)[0])
        oracle = filtered_g2_oracle(params, Gamma, np.asarray([0.0])).values[0]
        dev = max(dev, abs(analytic - oracle) / oracle)
    details.append("central peak g2(0) within relative tolerance")

    # narrow filter: thermal-like bunching, leading orders in Gamma
    taun = np.linspace(0.0, 300.0, 16)
    analytic = _perturb(
        sfilt.filtered_g2_mollow_narrowband(params, 1e-2, taun).values,
        name, fault, 0.1)
    oracle = filtered_g2_oracle(params, 1e-2, taun).values
    dev = max(dev, float(np.max(np.abs(analytic - oracle) / np.abs(oracle))))
    details.append("narrowband expansion pointwise")

    # broad filter: Rabi oscillations reappear
    taub = np.linspace(0.0, 3.0, 16)
    analytic = _perturb(
        sfilt.filtered_g2_mollow_broadband(params, 200.0, taub).values,
        name, fault, 0.1)
    oracle = filtered_g2_oracle(params, 200.0, taub).values
    dev = max(dev, float(np.max(np.abs(analytic - oracle))))
    details.append("broadband expansion pointwise")

    return _result(name, dev, 2e-2, "; ".join(details))


def _check_engine_invariants(quick: bool) -> CheckResult:
    name = "engine.invariants"
    params = EmitterParams(1.0, CoherentDrive(0.5))
    dev_parts = []

    # trace preservation under propagation
    from . import numerics
    from .liouvillian import steady_state
    liou = build_liouvillian(SystemSpec(params))
    rho = steady_state(liou)
    d = liou.hilbert_dim
    v0 = rho.reshape(-1, order="F")
    states = numerics.propagate(liou.matrix, v0, np.linspace(0.0, 10.0, 6))
    traces = np.array([
        np.trace(s.reshape((d, d), order="F")).real for s in states])
    dev_parts.append(("trace", float(np.max(np.abs(traces - 1.0))), 1e-9))

    # coupling-halving invariance of the filtered oracle
    tau = np.linspace(0.0, 6.0, 7)
    Gamma = 1.0
    eps0 = SensorSpec(Gamma=Gamma).coupling(params.gamma_sigma)
    base = filtered_g2_oracle(params, Gamma, tau, epsilon=eps0).values
    half = filtered_g2_oracle(params, Gamma, tau, epsilon=eps0 / 2.0).values
    dev_parts.append(("epsilon-halving", float(np.max(np.abs(base - half))), 1e-6))

    # Fock-truncation sufficiency
    bigger = filtered_g2_oracle(params, Gamma, tau, n_max=3).values
    dev_parts.append(("truncation", float(np.max(np.abs(base - bigger))), 1e-6))

    # long-delay plateau
    plateau = filtered_g2_oracle(params, Gamma, np.asarray([50.0])).values[0]
    dev_parts.append(("plateau", abs(plateau - 1.0), 1e-5))

    worst = max(d / t for _, d, t in dev_parts)  # scaled: <= 1 means pass
    detail = "; ".join(f"{lbl} {d:.2e} (tol {t:.0e})" for lbl, d, t in dev_parts)
    return CheckResult(name=name, passed=bool(worst <= 1.0),
                       max_deviation=float(worst), tolerance=1.0,
                       detail=detail)
