"""Emit src/antibunch/_filtered_coeffs.py from the symbolic amplitudes.

Combines the three amplitudes whose transcription was verified exact
(G1, G2, G4 in check_transcription.py) with the four re-derived by moment
matching (G3, G5, G6, G7 in /tmp/moment_amps.pkl), generates plain-Python
code for them, and verifies the generated module against numerically
exact residues of the 16x16 regression generator.
"""

import cmath
import pickle
import sys

import sympy as sp

sys.path.insert(0, "tools")
from check_transcription import amp_1, amp_2, amp_4, numeric_residues  # noqa: E402

G, W = sp.symbols("G W", positive=True)
gm = sp.Symbol("gm")

HEADER = '''"""Amplitudes of the seven-exponential filtered-coherent g2.

Machine-generated by tools/emit_coeffs.py from the symbolic moment
hierarchy of the emitter + sensor-mode system; do not edit by hand.

``terms(G, W, gm)`` returns the seven ``(amplitude, rate)`` pairs of

    g2(tau) = 1 + sum_k amplitude_k * exp(-rate_k * tau)

in units of the emitter decay rate (G = Gamma/gamma, W = Omega/gamma,
gm = sqrt(1 - 64 W**2), continued to the imaginary axis for W > 1/8).
Rates: (3 + gm)/4, (3 - gm)/4, G/2, (G + 1)/2, (2G + 3 + gm)/4,
(2G + 3 - gm)/4, G.  The amplitudes are rational in (G, W, gm) and have
poles where rates collide; callers detect the blow-up and fall back to
the Liouvillian oracle there.
"""


def terms(G, W, gm):
    W2 = W * W
'''


def main():
    with open("/tmp/moment_amps.pkl", "rb") as fh:
        derived = {k: sp.sympify(v) for k, v in pickle.load(fh).items()}

    amps = {
        "a1": sp.together(sp.sympify(amp_1(G, W, gm))),
        "a2": sp.together(sp.sympify(amp_2(G, W, gm))),
        "a3": sp.together(derived["G3"]),
        "a4": sp.together(sp.sympify(amp_4(G, W, gm))),
        "a5": sp.together(derived["G5"]),
        "a6": sp.together(derived["G6"]),
        "a7": sp.together(derived["G7"]),
    }

    lines = [HEADER.rstrip("\n")]
    for name, expr in amps.items():
        num, den = sp.fraction(expr)
        code_n = sp.pycode(sp.expand(num).subs(W**2, sp.Symbol("W2")))
        code_d = sp.pycode(sp.expand(den).subs(W**2, sp.Symbol("W2")))
        lines.append(f"    {name} = ({code_n}) / ({code_d})")
    lines.append("""    return [
        (a1, (3 + gm) / 4),
        (a2, (3 - gm) / 4),
        (a3, G / 2),
        (a4, (G + 1) / 2),
        (a5, (2 * G + 3 + gm) / 4),
        (a6, (2 * G + 3 - gm) / 4),
        (a7, G),
    ]
""")
    path = "src/antibunch/_filtered_coeffs.py"
    with open(path, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {path}")

    sys.path.insert(0, "src")
    from antibunch import _filtered_coeffs

    worst = 0.0
    for Gv, Wv in ((0.7, 0.05), (2.5, 0.09), (0.7, 0.9), (5.0, 0.5),
                   (0.2, 2.0), (9.0, 0.02)):
        gmv = cmath.sqrt(1 - 64 * Wv * Wv)
        res = numeric_residues(Gv, Wv)
        for ampl, rate in _filtered_coeffs.terms(Gv, Wv, gmv):
            num = None
            for lamv, r in res.items():
                if abs(lamv + rate) < 1e-7 * max(1.0, abs(rate)):
                    num = r
                    break
            if num is None:  # residue numerically negligible at this point
                assert abs(ampl) < 1e-9, (Gv, Wv, rate, ampl)
                continue
            dev = abs(ampl - num) / max(1.0, abs(num))
            worst = max(worst, dev)
            assert dev < 1e-7, (Gv, Wv, rate, ampl, num)
        total = 1 + sum(a for a, _ in _filtered_coeffs.terms(Gv, Wv, gmv))
        assert abs(total.imag) < 1e-9
    print(f"verified against numeric residues, worst dev {worst:.2e}")


if __name__ == "__main__":
    main()
