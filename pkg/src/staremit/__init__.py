"""Exact dynamics of a two-level emitter star-coupled to N field modes.

The package models the emitter-plus-modes system as a finite Hermitian
eigenproblem: build arrowhead Hamiltonians from physical parameters,
evolve exactly through the spectral decomposition, construct Hamiltonians
that realize a prescribed spectrum and overlap profile, and analyze the
decay/revival structure of the survival probability.
"""

from .analysis import (
    EmissionMetrics,
    FourierExpansion,
    dirichlet_survival,
    emission_metrics,
    fourier_coefficients,
    profile_survival,
    revival_period,
    sqrt_survival_from_fourier,
)
from .errors import (
    AsymmetricProfile,
    DegenerateProfile,
    DimensionMismatch,
    NonConvergence,
    StepTooLarge,
    ThresholdOutOfRange,
)
from .evolution import (
    SurvivalSeries,
    TimeGrid,
    evolve_oracle,
    evolve_state,
    survival_probability,
    survival_series,
)
from .hermitian import (
    SpectralDecomposition,
    aggregate_degenerate,
    check_hermitian,
    eigh,
    reconstruct,
)
from .inverse import (
    RoundTripReport,
    SpectralProfile,
    construct_hamiltonian,
    equally_spaced_spectrum,
    flat_profile,
    random_profile,
    verify_round_trip,
)
from .model import (
    BrightDarkSpectrum,
    StarModel,
    build_hamiltonian,
    detuned_two_level_survival,
    identical_modes_spectrum,
    identical_modes_survival,
    two_level_survival,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricProfile",
    "BrightDarkSpectrum",
    "DegenerateProfile",
    "DimensionMismatch",
    "EmissionMetrics",
    "FourierExpansion",
    "NonConvergence",
    "RoundTripReport",
    "SpectralDecomposition",
    "SpectralProfile",
    "StarModel",
    "StepTooLarge",
    "SurvivalSeries",
    "ThresholdOutOfRange",
    "TimeGrid",
    "aggregate_degenerate",
    "build_hamiltonian",
    "check_hermitian",
    "construct_hamiltonian",
    "detuned_two_level_survival",
    "dirichlet_survival",
    "eigh",
    "emission_metrics",
    "equally_spaced_spectrum",
    "evolve_oracle",
    "evolve_state",
    "flat_profile",
    "fourier_coefficients",
    "identical_modes_spectrum",
    "identical_modes_survival",
    "profile_survival",
    "random_profile",
    "reconstruct",
    "revival_period",
    "sqrt_survival_from_fourier",
    "survival_probability",
    "survival_series",
    "two_level_survival",
    "verify_round_trip",
]
