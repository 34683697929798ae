"""Dense complex linear algebra and adaptive quadrature on [0, inf).

Everything here is a thin, contract-checked layer over LAPACK (through
scipy.linalg) and QUADPACK (through scipy.integrate).  The systems handled
by this package are small (Liouvillians up to 36x36), so dense direct
methods are used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import integrate
from scipy.linalg import expm, lu_factor, lu_solve, svd


class NumericsError(Exception):
    """Base class for numerical-contract violations."""


class SingularMatrixError(NumericsError):
    pass


class KernelDimensionError(NumericsError):
    pass


class QuadratureError(NumericsError):
    pass


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def solve_linear(a, b) -> np.ndarray:
    """Solve A x = b for a dense complex square matrix A.

    Raises SingularMatrixError when a pivot of the LU factorization falls
    below 1e-14 * ||A||.
    """
    a = _as_matrix(a)
    b = np.asarray(b, dtype=complex)
    if b.shape[0] != a.shape[0]:
        raise ValueError("right-hand side length does not match matrix size")
    if not np.all(np.isfinite(b)):
        raise ValueError("right-hand side has non-finite entries")
    norm_a = np.linalg.norm(a, ord=np.inf)
    lu, piv = lu_factor(a, check_finite=False)
    pivots = np.abs(np.diag(lu))
    if norm_a == 0 or np.min(pivots) < 1e-14 * norm_a:
        raise SingularMatrixError("matrix is singular to working precision")
    return lu_solve((lu, piv), b, check_finite=False)


def null_vector(a, rtol: float = 1e-9) -> np.ndarray:
    """Return a unit-norm vector spanning the one-dimensional kernel of A.

    Raises KernelDimensionError when the numerical kernel is empty or has
    dimension greater than one (judged by the two smallest singular values
    relative to the largest).
    """
    a = _as_matrix(a)
    _, s, vh = svd(a, check_finite=False)
    scale = s[0] if s[0] > 0 else 1.0
    if s[-1] > rtol * scale:
        raise KernelDimensionError("matrix has no numerical kernel")
    if len(s) > 1 and s[-2] <= rtol * scale:
        raise KernelDimensionError("kernel dimension exceeds one")
    return vh[-1].conj()


def propagate(a, v0, t_grid) -> np.ndarray:
    """Evaluate exp(A t) v0 on an ascending grid of times t >= 0.

    Returns an array of shape (len(t_grid), len(v0)).  Uses
    scaling-and-squaring matrix exponentials over the grid increments.
    """
    a = _as_matrix(a)
    v = np.asarray(v0, dtype=complex)
    t_grid = np.asarray(t_grid, dtype=float)
    if v.shape[0] != a.shape[0]:
        raise ValueError("state length does not match matrix size")
    if not np.all(np.isfinite(v)) or not np.all(np.isfinite(t_grid)):
        raise ValueError("non-finite input")
    if t_grid.ndim != 1 or np.any(np.diff(t_grid) < 0) or (len(t_grid) and t_grid[0] < 0):
        raise ValueError("t_grid must be ascending and non-negative")

    out = np.empty((len(t_grid), len(v)), dtype=complex)
    t_prev = 0.0
    cache: dict[float, np.ndarray] = {}
    for i, t in enumerate(t_grid):
        dt = t - t_prev
        if dt > 0:
            step = cache.get(dt)
            if step is None:
                step = expm(a * dt)
                cache[dt] = step
            v = step @ v
        elif t_prev == 0.0 and dt == 0.0:
            pass
        out[i] = v
        t_prev = t
    return out


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for adaptive quadrature on [0, inf).

    The integration domain is truncated at T* such that
    exp(-decay_rate * T*) < abs_tol / 100; the analytic tail bound is folded
    into the error estimate.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 200
    tail_margin: float = 100.0

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureSpec()


def integrate_semi_infinite(f, decay_rate: float,
                            spec: QuadratureSpec = DEFAULT_QUADRATURE,
                            kinks=()) -> float:
    """Integrate f over [0, inf) for an integrand decaying like exp(-decay_rate x).

    Known kink locations (e.g. edges of compactly supported kernels) are
    passed to the subdivision so the adaptive rule keeps its order across
    them.  Raises QuadratureError when the subdivision budget is exhausted
    or the error estimate exceeds the requested tolerances.
    """
    if decay_rate <= 0:
        raise ValueError("decay_rate must be positive")
    t_star = np.log(spec.tail_margin / spec.abs_tol) / decay_rate
    points = sorted({float(k) for k in kinks if 0.0 < k < t_star})
    result = integrate.quad(
        f, 0.0, t_star,
        points=points or None,
        limit=spec.max_subdivisions,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        full_output=1,
    )
    if len(result) > 3:
        raise QuadratureError(f"quadrature did not converge: {result[3]}")
    value, abserr = result[0], result[1]
    tail_bound = np.exp(-decay_rate * t_star) / decay_rate
    total_err = abserr + tail_bound
    if total_err > 10 * max(spec.abs_tol, spec.rel_tol * abs(value)):
        raise QuadratureError(
            f"estimated error {total_err:.3e} exceeds tolerance for value {value:.6e}")
    return value
