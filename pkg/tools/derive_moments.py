"""Closed forms of the remaining filtered-coherent amplitudes by moment
matching.

The regression vector evolves as dr/dt = B r with a 16x16 block-triangular
generator, so the correlation C(tau) = r11[0](tau) is a sum of exponentials
whose p-th spectral moments are plain matrix-vector products:

    sum_k Amp_k * lambda_k^p = (B^p r(0))[12] / n_xi^2    (p >= 1)

No inversion in a Laplace variable is needed.  Three of the seven
amplitudes are already known in closed form, so the moments p = 0..3
determine the remaining four through a 4x4 Vandermonde solve in the known
rates.  Results are verified against numerically exact residues of the
same generator before being saved.
"""

import cmath
import pickle
import sys

import sympy as sp

sys.path.insert(0, "tools")
from check_transcription import amp_1, amp_2, amp_4, numeric_residues  # noqa: E402

G, W = sp.symbols("G W", positive=True)
gm = sp.Symbol("gm")
GM2 = 1 - 64 * W**2

A = sp.Matrix([
    [0, 0, 0, 0],
    [-sp.I * W, -sp.Rational(1, 2), 0, 2 * sp.I * W],
    [sp.I * W, 0, -sp.Rational(1, 2), -2 * sp.I * W],
    [0, sp.I * W, -sp.I * W, -1],
])
P_dag = sp.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
P_sig = sp.Matrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])


def _poly_mod_gm(expr):
    p = sp.Poly(sp.expand(expr), gm)
    even = sp.Integer(0)
    odd = sp.Integer(0)
    for (k,), coeff in p.terms():
        red = coeff * GM2 ** (k // 2)
        if k % 2:
            odd += red
        else:
            even += red
    return sp.cancel(even), sp.cancel(odd)


def reduce_gm(expr):
    """Canonical form a(G,W) + b(G,W)*gm with gm^2 -> 1 - 64 W^2."""
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    na, nb = _poly_mod_gm(num)
    da, db = _poly_mod_gm(den)
    if db != 0:
        na, nb = (sp.cancel(na * da - nb * db * GM2),
                  sp.cancel(nb * da - na * db))
        den_free = sp.cancel(da**2 - db**2 * GM2)
    else:
        den_free = da
    return sp.cancel((na + nb * gm) / den_free)


def steady_hierarchy():
    m = {}
    m00 = sp.Matrix([1, 0, 0, 0])
    sol = A[1:, 1:].LUsolve(-A[1:, 0])
    for i in range(3):
        m00[i + 1] = sp.cancel(sol[i])
    m[(0, 0)] = m00
    for k in (1, 2, 3, 4):
        for mu in range(max(0, k - 2), min(2, k) + 1):
            nu = k - mu
            f = sp.zeros(4, 1)
            if mu > 0:
                f += sp.I * mu * P_dag * m[(mu - 1, nu)]
            if nu > 0:
                f -= sp.I * nu * P_sig * m[(mu, nu - 1)]
            m[(mu, nu)] = (A - sp.Rational(k, 2) * G * sp.eye(4)).LUsolve(
                -f).applyfunc(sp.cancel)
    return m


def regression_generator():
    Z = sp.zeros(4, 4)
    half = G / 2 * sp.eye(4)
    return sp.Matrix(sp.BlockMatrix([
        [A, Z, Z, Z],
        [sp.I * P_dag, A - half, Z, Z],
        [-sp.I * P_sig, Z, A - half, Z],
        [Z, -sp.I * P_sig, sp.I * P_dag, A - G * sp.eye(4)],
    ]))


def main():
    m = steady_hierarchy()
    n_xi = sp.cancel(m[(1, 1)][0])
    print("steady hierarchy ok", flush=True)

    v = sp.Matrix.vstack(m[(1, 1)], m[(2, 1)], m[(1, 2)], m[(2, 2)])
    B = regression_generator()

    moments = []
    vec = v
    for p in range(4):
        moments.append(sp.cancel(vec[12] / n_xi**2))
        if p < 3:
            vec = (B * vec).applyfunc(sp.cancel)
        print(f"moment {p} ok", flush=True)

    # subtract the plateau (rate 0, amplitude 1) and the three amplitudes
    # known in closed form
    known = {
        "G1": (sp.sympify(amp_1(G, W, gm)), -(3 + gm) / 4),
        "G2": (sp.sympify(amp_2(G, W, gm)), -(3 - gm) / 4),
        "G4": (sp.sympify(amp_4(G, W, gm)), -(G + 1) / 2),
    }
    unknown_rates = {
        "G3": -G / 2,
        "G5": -(2 * G + 3 + gm) / 4,
        "G6": -(2 * G + 3 - gm) / 4,
        "G7": -G,
    }
    names = list(unknown_rates)
    rhs = sp.zeros(4, 1)
    V = sp.zeros(4, 4)
    for p in range(4):
        total = moments[p]
        if p == 0:
            total -= 1  # plateau
        for ampl, lam in known.values():
            total -= ampl * lam**p
        rhs[p] = reduce_gm(total)
        for j, name in enumerate(names):
            V[p, j] = unknown_rates[name] ** p
        print(f"rhs {p} ok", flush=True)

    sol = V.LUsolve(rhs)
    results = {}
    for j, name in enumerate(names):
        results[name] = reduce_gm(sol[j])
        print(f"{name} solved", flush=True)

    for Gv, Wv in ((0.7, 0.05), (2.5, 0.09), (0.7, 0.9), (5.0, 0.5)):
        gmv = cmath.sqrt(1 - 64 * Wv * Wv)
        res = numeric_residues(Gv, Wv)
        for name, expr in results.items():
            lam = complex(unknown_rates[name].subs({G: Gv, gm: gmv}))
            num = None
            for lamv, r in res.items():
                if abs(lamv - lam) < 1e-7 * max(1.0, abs(lam)):
                    num = r
                    break
            val = complex(expr.subs({G: Gv, W: Wv, gm: gmv}))
            dev = abs(val - num) / max(1.0, abs(num))
            print(f"  (G={Gv}, W={Wv}) {name}: sym {val:.8g} num {num:.8g} "
                  f"dev {dev:.2e}", flush=True)
            assert dev < 1e-9, (name, Gv, Wv)
    print("all verified", flush=True)

    with open("/tmp/moment_amps.pkl", "wb") as fh:
        pickle.dump({k: sp.srepr(v) for k, v in results.items()}, fh)
    print("saved /tmp/moment_amps.pkl")
    for name, expr in results.items():
        print(f"\n=== {name} ===\n{expr}")


if __name__ == "__main__":
    main()
