"""Photon correlations of a driven two-level emitter, and their degradation.

The package computes the second-order coherence function g2(tau) of a
two-level system under incoherent pumping or coherent (resonant) driving,
and models three ways a real experiment degrades it:

* contamination by an uncorrelated noise source (:mod:`antibunch.noise`),
* detector time-jitter, as a convolution with a response kernel
  (:mod:`antibunch.jitter`),
* frequency filtering with a Lorentzian detection window
  (:mod:`antibunch.sensorfilter`).

Closed forms are validated against independent numerical oracles: direct
quadrature for the jitter convolutions, and Lindblad/regression dynamics of
the emitter (optionally coupled to a weak sensor mode) for everything else
(:mod:`antibunch.liouvillian`, :mod:`antibunch.validate`).
"""

from .emitter import (
    CoherentDrive,
    CorrelationCurve,
    EmitterParams,
    IncoherentDrive,
    bare_g2_coherent,
    bare_g2_heitler,
    bare_g2_incoherent,
    classify,
    fano_factor,
    g2_from_distribution,
    gamma_mollow,
    mollow_envelopes,
    tau_grid,
)
from .jitter import (
    JitterKernel,
    jitter_robustness_scan,
    jittered_g2_analytic,
    jittered_g2_numeric,
    kernel_autocorrelation,
    kernel_density,
    master_integral,
)
from .liouvillian import (
    SensorSpec,
    SystemSpec,
    build_liouvillian,
    emission_spectrum,
    filtered_g2_oracle,
    g2_tau,
    sensor_population,
    steady_state,
)
from .noise import NoiseSpec, mix_noise, noise_dominated_limit, thermal_g2
from .sensorfilter import (
    FilteredCoefficients,
    filtered_g2_coherent_coefficients,
    filtered_g2_coherent_general,
    filtered_g2_coherent_zero_delay,
    filtered_g2_heitler,
    filtered_g2_incoherent,
    filtered_g2_incoherent_isoline,
    filtered_g2_incoherent_zero_delay,
    filtered_g2_mollow_broadband,
    filtered_g2_mollow_central,
    filtered_g2_mollow_narrowband,
    max_bunching_scan,
)
from .validate import run_validation

__version__ = "1.0.0"

__all__ = [
    "CoherentDrive",
    "CorrelationCurve",
    "EmitterParams",
    "FilteredCoefficients",
    "IncoherentDrive",
    "JitterKernel",
    "NoiseSpec",
    "SensorSpec",
    "SystemSpec",
    "bare_g2_coherent",
    "bare_g2_heitler",
    "bare_g2_incoherent",
    "build_liouvillian",
    "classify",
    "emission_spectrum",
    "fano_factor",
    "filtered_g2_coherent_coefficients",
    "filtered_g2_coherent_general",
    "filtered_g2_coherent_zero_delay",
    "filtered_g2_heitler",
    "filtered_g2_incoherent",
    "filtered_g2_incoherent_isoline",
    "filtered_g2_incoherent_zero_delay",
    "filtered_g2_mollow_broadband",
    "filtered_g2_mollow_central",
    "filtered_g2_mollow_narrowband",
    "filtered_g2_oracle",
    "g2_from_distribution",
    "g2_tau",
    "gamma_mollow",
    "jitter_robustness_scan",
    "jittered_g2_analytic",
    "jittered_g2_numeric",
    "kernel_autocorrelation",
    "kernel_density",
    "master_integral",
    "max_bunching_scan",
    "mix_noise",
    "mollow_envelopes",
    "noise_dominated_limit",
    "run_validation",
    "sensor_population",
    "steady_state",
    "tau_grid",
    "thermal_g2",
]
