"""How uncorrelated noise and detector time-jitter wash out antibunching.

Noise mixing is pure arithmetic on the correlation functions: a signal
with perfect antibunching contaminated by coherent noise of relative
intensity xi has g2(0) = 0.5 already at xi = sqrt(2) - 1 ~ 0.41.

Time-jitter convolves g2 with the detector response autocorrelation.
Four response shapes (heaviside, exponential, laplace, gaussian) are
compared at equal variance 1/Gamma^2; the antibunching dip fills in as
the jitter time 1/Gamma grows, saturating at 1 (randomization), never at
2 (no thermalization).

Run: python3 demos/02_noise_and_jitter.py
"""

import numpy as np

from antibunch import (
    EmitterParams,
    IncoherentDrive,
    JitterKernel,
    NoiseSpec,
    bare_g2_incoherent,
    jittered_g2_analytic,
    mix_noise,
)

params = EmitterParams(1.0, IncoherentDrive(1.0))
tau0 = np.array([0.0])
signal = bare_g2_incoherent(params, tau0)

print("-- noise contamination at zero delay --")
for xi in (0.1, np.sqrt(2.0) - 1.0, 1.0, 2.0):
    coh = mix_noise(signal, NoiseSpec(xi=xi, model="coherent")).values[0]
    thm = mix_noise(signal, NoiseSpec(xi=xi, model="thermal",
                                      gamma_n=1.0)).values[0]
    print(f"  xi = {xi:6.4f}   coherent noise: {coh:7.5f}"
          f"   thermal noise: {thm:7.5f}")

print()
print("-- time-jitter at zero delay, equal-variance kernels --")
kinds = ("heaviside", "exponential", "laplace", "gaussian")
print("  1/Gamma   " + "  ".join(f"{k:>11s}" for k in kinds))
for width in (0.1, 0.5, 1.0, 5.0, 100.0):
    row = []
    for kind in kinds:
        kernel = JitterKernel(kind=kind, Gamma=1.0 / width,
                              convention="equal_variance")
        row.append(jittered_g2_analytic(params, kernel, tau0).values[0])
    print(f"  {width:7.2f}  " + "  ".join(f"{v:11.6f}" for v in row))

print()
print("Broad jitter drives every kernel's g2(0) to 1: photon arrival")
print("times are randomized, so correlations flatten but never bunch.")
