"""Validate the transcribed seven-exponential filtered-correlation amplitudes
against numerically exact residues of the sensor moment hierarchy.

The correlator C(tau)/n^2 = e12^T exp(B tau) v0 / n^2 with B the 16x16
block-triangular generator of the two-sided moment cascade; its residue at
eigenvalue lambda is (e12^T V) diag (V^-1 v0) summed over the lambda-group.
Each transcribed amplitude G_i must match the residue at rate gamma_i.
"""

import cmath

import numpy as np

import sys
sys.path.insert(0, "src")
from antibunch.emitter import EmitterParams, CoherentDrive  # noqa: E402
from antibunch.liouvillian import filtered_g2_oracle  # noqa: E402


def hierarchy_generator(G, W):
    """16x16 generator and initial/readout data (gamma_sigma = 1 units)."""
    A = np.array([
        [0.0, 0.0, 0.0, 0.0],
        [-1j * W, -0.5, 0.0, 2j * W],
        [1j * W, 0.0, -0.5, -2j * W],
        [0.0, 1j * W, -1j * W, -1.0],
    ], dtype=complex)
    # d<O sigma_+^mu sigma_-^nu>/dt couplings (basis I, s, s+, n)
    Pd = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
                  dtype=complex)
    Ps = np.array([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
                  dtype=complex)
    m = {}
    m[(0, 0)] = np.concatenate([[1.0], np.linalg.solve(A[1:, 1:], -A[1:, 0])])
    for k in (1, 2, 3, 4):
        for mu in range(max(0, k - 2), min(2, k) + 1):
            nu = k - mu
            f = np.zeros(4, dtype=complex)
            if mu > 0:
                f += 1j * mu * Pd @ m[(mu - 1, nu)]
            if nu > 0:
                f -= 1j * nu * Ps @ m[(mu, nu - 1)]
            m[(mu, nu)] = np.linalg.solve(A - (k / 2) * G * np.eye(4), -f)
    n_xi = m[(1, 1)][0].real
    B = np.zeros((16, 16), dtype=complex)
    B[0:4, 0:4] = A
    B[4:8, 4:8] = A - G / 2 * np.eye(4)
    B[8:12, 8:12] = A - G / 2 * np.eye(4)
    B[12:16, 12:16] = A - G * np.eye(4)
    B[4:8, 0:4] = 1j * Pd
    B[8:12, 0:4] = -1j * Ps
    B[12:16, 8:12] = 1j * Pd
    B[12:16, 4:8] = -1j * Ps
    v0 = np.concatenate([m[(1, 1)], m[(2, 1)], m[(1, 2)], m[(2, 2)]])
    return B, v0, n_xi


def numeric_residues(G, W):
    """{eigenvalue: residue} of C(tau)/n^2, grouped to 1e-9."""
    B, v0, n_xi = hierarchy_generator(G, W)
    lam, V = np.linalg.eig(B)
    w = np.linalg.solve(V, v0)
    row = V[12, :]
    res = {}
    for i in range(16):
        contrib = row[i] * w[i] / n_xi**2
        for key in res:
            if abs(key - lam[i]) < 1e-9:
                res[key] += contrib
                break
        else:
            res[lam[i]] = contrib
    return {k: v for k, v in res.items() if abs(v) > 1e-11}


# ---------------------------------------------------------------------------
# transcribed amplitudes (gamma_sigma = 1; gm = sqrt(1 - 64 W^2), complex)
# ---------------------------------------------------------------------------

def gij(G, i, j):
    return i * G + j


def amp_1(G, W, gm):
    W2, W4 = W * W, W**4
    g11, g12, g21 = G + 1, G + 2, 2 * G + 1
    t1 = (G * (G - 2) * (G - 1) * (gm + 1)
          + 8 * (14 * G**2 + 2 * (gm + 1) - G * (7 * gm + 17)) * W2
          - 512 * W4)
    t2 = (g11 * g12 * g21 * (G * (gm - 3) + 2 * (gm - 1))
          + 8 * (8 * G**3 + 32 * G - 2 * (gm - 7) + G**2 * (gm + 25)) * W2
          + 256 * G * W4)
    num = 512 * G**2 * g11 * W2 * (g11 * g12 + 16 * W2) * t1 * t2
    den = (gm * (gm - G) * (gm - 1) * (gm + 1)**2 * (gm + 1 - 2 * G)
           * (gm + 3 - 4 * G) * (gm + 3 - 2 * G)
           * (g11 * g21 + 8 * W2) * (g11**2 * g12 + 8 * G * W2)**2)
    return num / den


def amp_2(G, W, gm):
    return amp_1(G, W, -gm)


def amp_3(G, W, gm):
    W2, W4 = W * W, W**4
    g11, g12, g21 = G + 1, G + 2, 2 * G + 1
    num = 2 * (256 * G * g11 * W2 * (g11 * g12 + 16 * W2)
               * (g11**2 * g12 * (G - 2) * g21**2
                  + 8 * g11 * (9 * G**3 + 20 * G * g11 + 8) * W2
                  + 128 * G**2 * W4))
    den = (g11**2 * g21 * (gm**2 - 1) * (gm**2 - (2 * G - 3)**2)
           * (g11 * g21 + 8 * W2) * (g11**2 * g12 + 8 * G * W2)**2)
    return num / den


def amp_4(G, W, gm):
    W2, W4 = W * W, W**4
    g11, g12, g31 = G + 1, G + 2, 3 * G + 1
    num = 2 * (2 * G**3 * (1 + 8 * W2) * (g11 * g12 + 16 * W2)
               * (g11**2 * g12**2 * g31 + 48 * G * g11**2 * W2 - 256 * W4))
    den = ((G - 1) * g31 * (gm**2 - (2 * G - 1)**2)
           * (g11 * g21_of(G) + 8 * W2) * (g11**2 * g12 + 8 * G * W2)**2)
    return num / den


def g21_of(G):
    return 2 * G + 1


def amp_5(G, W, gm):
    W2, W4 = W * W, W**4
    W6, W8 = W**6, W**8
    g11, g12, g21 = G + 1, G + 2, 2 * G + 1
    g31, g32 = 3 * G + 1, 3 * G + 2
    b0 = (g11**2 * g12**2 * g21 * g31 * g32
          * (2 * G**2 * (gm - 3) - G * (gm + 3) - 2 * (gm - 1)))
    b2 = 8 * g11 * g12 * (
        -108 * G**6 + G**5 * (215 * gm - 1203) + 3 * G**4 * (239 * gm - 1081)
        + G**3 * (1051 * gm - 3947) + G**2 * (803 * gm - 2465)
        + 10 * G * (31 * gm - 77) + 48 * (gm + 2))
    b4 = 128 * (
        6 * G**6 + G**5 * (131 * gm - 227) + G**4 * (546 * gm - 776)
        + G**3 * (889 * gm - 933) + G**2 * (724 * gm - 488)
        + G * (296 * gm - 96) + 48 * gm)
    b6 = 2048 * (
        74 * G**4 + 2 * G**3 * (6 * gm + 109) + 5 * G**2 * (3 * gm + 61)
        + 2 * G * (-gm + 103) - 4 * (gm - 13))
    num = 2 * (-1024) * G**2 * g11 * W4 * (
        b0 + b2 * W2 + b4 * W4 + b6 * W6 + 131072 * G * g21 * W8)
    den = (g21 * gm * (gm + G) * (gm - 1) * (gm + 1)**2 * (gm - (2 * G - 3))
           * (g11 * g21 + 8 * W2) * (g11**2 * g12 + 8 * G * W2)**2
           * (g31 * g32 + 16 * W2))
    return num / den


def amp_6(G, W, gm):
    return amp_5(G, W, -gm)


def amp_7(G, W, gm):
    W2, W4 = W * W, W**4
    W6, W8 = W**6, W**8
    g11, g12, g21 = G + 1, G + 2, 2 * G + 1
    g31, g32 = 3 * G + 1, 3 * G + 2
    lead = (g11 * g12 + 16 * W2) * (g11 * g12 * g21**2 * g31**2 * g32
                                    * (G - 1) * (G - 2) * (2 * G - 1))
    c2 = 8 * g31 * (142 * G**7 + 239 * G**6 - 241 * G**5 - 677 * G**4
                    + 77 * G**3 + 832 * G**2 + 580 * G + 128)
    c4 = 64 * (219 * G**6 + 386 * G**5 + 565 * G**4 + 344 * G**3
               - 98 * G**2 - 208 * G - 56)
    c6 = 1024 * (15 * G**4 - 11 * G**3 - 4 * G**2 - 16 * G - 8)
    num = 32 * G**2 * g11 * (1 + 8 * W2) * (
        lead + c2 * W2 + c4 * W4 + c6 * W6 - 16384 * W8 * g21)
    den = (g21 * g31 * (G - 1) * (gm**2 - (3 * G - 2)**2)
           * (gm**2 - (4 * G - 3)**2)
           * (g11 * g21 + 8 * W2) * (g11 * g12 + 8 * W2)
           * (g31 * g32 + 16 * W2))
    return num / den


def rates(G, gm):
    return {
        1: (3 + gm) / 4,
        2: (3 - gm) / 4,
        3: G / 2,
        4: (G + 1) / 2,
        5: (2 * G + 3 + gm) / 4,
        6: (2 * G + 3 - gm) / 4,
        7: G,
    }


AMPS = {1: amp_1, 2: amp_2, 3: amp_3, 4: amp_4, 5: amp_5, 6: amp_6, 7: amp_7}


def compare(G, W):
    gm = cmath.sqrt(1.0 - 64.0 * W * W)
    res = numeric_residues(G, W)
    print(f"G={G}, W={W}, gm={gm:.6g}")
    rt = rates(G, gm)
    for i in sorted(rt):
        target = -rt[i]
        found = None
        for lam, val in res.items():
            if abs(lam - target) < 1e-7 * max(1.0, abs(target)):
                found = val
                break
        analytic = AMPS[i](G, W, gm)
        if found is None:
            print(f"  G{i} rate {rt[i]:.6g}: no numeric residue "
                  f"(analytic {analytic:.6g})")
            continue
        dev = abs(analytic - found) / max(1.0, abs(found))
        flag = "OK " if dev < 1e-7 else "BAD"
        print(f"  {flag} G{i}: analytic {analytic:.8g}  numeric {found:.8g}  "
              f"rel dev {dev:.2e}")
    # plateau
    for lam, val in res.items():
        if abs(lam) < 1e-9:
            print(f"  plateau residue: {val:.10f}")


if __name__ == "__main__":
    for G, W in [(0.7, 0.05), (2.5, 0.09), (0.45, 0.11),
                 (0.7, 0.9), (2.3, 1.7), (5.0, 0.5)]:
        compare(G, W)
        print()
