# gfn: stochastic free scalar field on a momentum lattice

from ._gfn import (
    AutocorrEstimate,
    BoostPair,
    CorrelatorEstimate,
    EnsembleConfig,
    InvarianceRow,
    ModeIndex,
    ModeSet,
    PhysicalParams,
    PropagatorValue,
    RngPolicy,
    Scheme,
    SpacetimePoint,
    __version__,
    bessel_k1,
    build_mode_set,
    component_variance,
    continued_mode_correlation,
    estimate_field_npoint,
    estimate_mode_autocorr,
    euclidean_interval,
    feynman_propagator,
    field_mode_correlation,
    lorentz_invariance_check,
    mode_correlation,
    mode_energy,
    mode_omega,
    mode_rate,
    npoint_continued,
    npoint_modesum,
    scaled_time_expectation,
    schwinger2_continuum,
    schwinger2_continuum_r,
    schwinger2_modesum,
    schwinger2_quadrature,
    schwingerN,
    spatial_distance,
    standard_boost_pairs,
    wick_pairings,
)

__all__ = [
    "AutocorrEstimate",
    "BoostPair",
    "CorrelatorEstimate",
    "EnsembleConfig",
    "InvarianceRow",
    "ModeIndex",
    "ModeSet",
    "PhysicalParams",
    "PropagatorValue",
    "RngPolicy",
    "Scheme",
    "SpacetimePoint",
    "__version__",
    "bessel_k1",
    "build_mode_set",
    "component_variance",
    "continued_mode_correlation",
    "estimate_field_npoint",
    "estimate_mode_autocorr",
    "euclidean_interval",
    "feynman_propagator",
    "field_mode_correlation",
    "lorentz_invariance_check",
    "mode_correlation",
    "mode_energy",
    "mode_omega",
    "mode_rate",
    "npoint_continued",
    "npoint_modesum",
    "scaled_time_expectation",
    "schwinger2_continuum",
    "schwinger2_continuum_r",
    "schwinger2_modesum",
    "schwinger2_quadrature",
    "schwingerN",
    "spatial_distance",
    "standard_boost_pairs",
    "wick_pairings",
]
