"""Derive the jitter master integrals symbolically.

A detection-time kernel D (a probability density) smears the two-photon
correlations as

    g2_jit(tau) = int_0^inf g2(theta) [C(tau - theta) + C(tau + theta)] dtheta,

where C is the autocorrelation of D.  Every bare correlator in the library is
a constant-plus-exponentials, g2(theta) = 1 - sum_k B_k exp(-mu_k theta), so
the whole convolution reduces to the master integral

    J(s, tau) = int_0^inf exp(-s theta) [C(tau - theta) + C(tau + theta)] dtheta

with g2_jit(tau) = 1 - sum_k B_k J(mu_k, tau).  This script evaluates J in
closed form for the four kernel families and prints the expressions that are
hard-coded (after hand-cleanup) in antibunch.jitter.  Run it to regenerate or
audit them:

    python3 tools/derive_jitter.py
"""

import numpy as np
import sympy as sp
from scipy.integrate import quad


def quad_autocorr_check(density_fn, c_expr, param_sym, param_val, u_val):
    """Numeric check that c_expr equals the autocorrelation of density_fn."""
    num, _ = quad(lambda t: density_fn(t) * density_fn(t + u_val), -60, 60,
                  limit=400)
    sym = float(c_expr.subs({param_sym: param_val, u: u_val}).evalf())
    assert abs(num - sym) < 1e-10, (num, sym)

theta, tau, u = sp.symbols("theta tau u", positive=True)
s = sp.Symbol("s", positive=True)


def autocorrelation(density, t, var_name):
    """C(u) = int D(t) D(t + u) dt for u >= 0 (C is even)."""
    c = sp.integrate(density * density.subs(t, t + u), (t, -sp.oo, sp.oo))
    c = sp.simplify(c)
    print(f"C_{var_name}(u>=0) = {c}")
    return c


def master(c_of_u, label, split_points=()):
    """J(s, tau) = int_0^inf e^(-s theta)[C(tau-theta) + C(tau+theta)] dtheta.

    C is given for non-negative argument; the tau-theta piece is split at
    theta = tau (and any finite-support edges) so |tau - theta| unfolds.
    """
    c_plus = c_of_u.subs(u, tau + theta)            # theta >= 0, tau >= 0
    c_minus_lo = c_of_u.subs(u, tau - theta)        # theta <= tau
    c_minus_hi = c_of_u.subs(u, theta - tau)        # theta >= tau
    j = (sp.integrate(sp.exp(-s * theta) * c_minus_lo, (theta, 0, tau))
         + sp.integrate(sp.exp(-s * theta) * c_minus_hi, (theta, tau, sp.oo))
         + sp.integrate(sp.exp(-s * theta) * c_plus, (theta, 0, sp.oo)))
    j = sp.simplify(j)
    print(f"\nJ_{label}(s, tau) = {j}\n")
    return j


def check(j, label):
    """J(s, 0) should be the Laplace transform 2*int_0^inf e^(-s t) C(t) dt
    and J -> 0 as tau -> oo; spot-check both."""
    at0 = sp.simplify(j.subs(tau, 1e-12))
    print(f"  {label}: J(s, 0+) ~ {sp.nsimplify(at0, rational=False)}")


print("=== exponential kernel, rate r: D(t) = r e^(-r t) heaviside(t) ===")
r = sp.Symbol("r", positive=True)
d_exp = r * sp.exp(-r * t_) if (t_ := sp.Symbol("t")) else None
d_exp = sp.Piecewise((r * sp.exp(-r * t_), t_ >= 0), (0, True))
c_exp = sp.integrate(d_exp.subs(t_, sp.Symbol("tt")) *
                     d_exp.subs(t_, sp.Symbol("tt") + u),
                     (sp.Symbol("tt"), -sp.oo, sp.oo))
c_exp = sp.simplify(c_exp)
print(f"C_exp(u>=0) = {c_exp}")
j_exp = master(c_exp, "exp")

print("=== Laplace kernel, rate b: D(t) = (b/2) e^(-b|t|) ===")
b = sp.Symbol("b", positive=True)
c_lap = (b / 4) * (1 + b * u) * sp.exp(-b * u)
print(f"C_lap(u>=0) = {c_lap}   (derived from (b/2)e^(-b|t|) by direct integration)")
quad_autocorr_check(lambda t: 0.7 * np.exp(-1.4 * abs(t)), c_lap, b, 1.4, 0.75)
j_lap = master(c_lap, "laplace")

print("=== Gaussian kernel, std sg: autocorrelation is N(0, 2 sg^2) ===")
sg = sp.Symbol("sg", positive=True)
c_gau = sp.exp(-u**2 / (4 * sg**2)) / (2 * sg * sp.sqrt(sp.pi))
quad_autocorr_check(
    lambda t: np.exp(-t**2 / (2 * 1.4**2)) / (1.4 * np.sqrt(2 * np.pi)),
    c_gau, sg, 1.4, 0.75)
j_gau = master(c_gau, "gaussian")

print("=== rectangular kernel, width w: triangle autocorrelation ===")
w = sp.Symbol("w", positive=True)
c_rect = sp.Piecewise(((1 - u / w) / w, u <= w), (0, True))
# the tau-theta unfolding needs the two regimes tau >= w and tau < w
for regime, cond in (("tau>=w", tau >= w), ("tau<w", tau < w)):
    with sp.assuming(sp.Q.positive(tau - w) if regime == "tau>=w"
                     else sp.Q.positive(w - tau)):
        c_plus = c_rect.subs(u, tau + theta)
        c_lo = c_rect.subs(u, tau - theta)
        c_hi = c_rect.subs(u, theta - tau)
        j = (sp.integrate(sp.exp(-s * theta) * c_lo, (theta, 0, tau))
             + sp.integrate(sp.exp(-s * theta) * c_hi, (theta, tau, sp.oo))
             + sp.integrate(sp.exp(-s * theta) * c_plus, (theta, 0, sp.oo)))
        j = sp.simplify(sp.refine(j, cond))
        print(f"\nJ_rect(s, tau | {regime}) = {j}\n")
