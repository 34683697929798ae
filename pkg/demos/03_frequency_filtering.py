"""Frequency filtering: the one detector imperfection that can *bunch*.

A Lorentzian filter of linewidth Gamma placed on the emission line does
more than blur the correlations.  Narrow filtering thermalizes the
signal -- g2(0) -> 2 -- because it selects a single, nearly classical
frequency component:

* incoherent pumping: g2(0) = 2 Gamma_sigma / (Gamma_sigma + 3 Gamma),
  crossing the uncorrelated value 1 at exactly Gamma = Gamma_sigma / 3;
* coherent drive: a seven-exponential closed form, validated against a
  two-level-system + sensor-mode Liouvillian oracle;
* the zero-delay bunching maximum over all linewidths approaches 3 at
  strong drive (filtering between the Mollow sidebands).

Run: python3 demos/03_frequency_filtering.py
"""

import numpy as np

from antibunch import (
    CoherentDrive,
    EmitterParams,
    IncoherentDrive,
    filtered_g2_coherent_coefficients,
    filtered_g2_incoherent_zero_delay,
    filtered_g2_oracle,
    max_bunching_scan,
)

inco = EmitterParams(1.0, IncoherentDrive(1.0))

print("-- filtered incoherent emission, zero delay --")
for Gamma in (0.01, 0.1, inco.Gamma_sigma / 3.0, 2.0, 100.0):
    val = filtered_g2_incoherent_zero_delay(inco, Gamma)
    print(f"  Gamma = {Gamma:8.4f}   g2(0) = {val:8.6f}")
print("  (narrow filter -> 2: thermalization; wide filter -> 0: bare dip)")

print()
print("-- filtered coherent drive: closed form vs Liouvillian oracle --")
params = EmitterParams(1.0, CoherentDrive(2.0))
tau = np.linspace(0.0, 10.0, 6)
coeffs = filtered_g2_coherent_coefficients(params, 0.7)
closed = coeffs.evaluate(tau)
oracle = filtered_g2_oracle(params, 0.7, tau).values
print("  tau      closed form      oracle")
for t, c, o in zip(tau, closed, oracle):
    print(f"  {t:5.2f}   {c:12.8f}   {o:12.8f}")
print(f"  max |deviation| = {np.max(np.abs(closed - oracle)):.2e}")
print(f"  seven modes, rates: "
      + ", ".join(f"{r:.3g}" for r in np.real(coeffs.rates)))

print()
print("-- maximum bunching over the filter linewidth --")
table = max_bunching_scan(Omega_grid=np.logspace(-1, 2, 7))
print("  Omega      best Gamma     max g2(0)")
for Om, Go, g2 in zip(table["Omega"], table["Gamma_opt"], table["g2_max"]):
    print(f"  {Om:8.3f}   {Go:10.4f}   {g2:10.6f}")
print("  The supremum approaches 3 with increasing drive, never exceeding it.")
