"""Computable operator theory on Dirichlet series.

Finite Dirichlet polynomials with exact coefficient arithmetic, rigorous
tail and seminorm bounds, convergence-abscissa estimation, and the diagonal
calculus of the differentiation and integration operators: resolvents,
spectrum classification, Volterra-type composition, and iterate-growth
diagnostics.
"""

from .abscissa import (
    AbscissaEstimate,
    BoundednessProbe,
    Estimate,
    bracket_sigma_u,
    estimate_sigma_a,
    estimate_sigma_c,
    sigma_a_estimate,
    sigma_c_estimate,
)
from .dynamics import (
    DynamicsReport,
    cesaro_mean,
    ergodicity_diagnostic,
    normalized_power_norm,
    power_apply,
)
from .errors import DomainError, SpectralError
from .evaluation import (
    GridSpec,
    SeminormEstimate,
    TailBound,
    boundary_values,
    evaluate,
    partial_sum,
    seminorm,
    summation_by_parts,
    tail_bound_monotone,
    truncation_for_tolerance,
)
from .operators import (
    GrowthReport,
    Multiplier,
    apply,
    check_growth,
    compose,
    derivative_multiplier,
    differentiate,
    identity_multiplier,
    integrate,
    integration_multiplier,
)
from .series import (
    ZERO,
    CoefficientRule,
    DirichletPolynomial,
    HalfPlanePoint,
    add,
    coefficient_close,
    dirichlet_multiply,
    eta_rule,
    monomial,
    moebius_rule,
    ones_rule,
    scale,
    table_rule,
    truncate,
    zeta_shift_rule,
)
from .spectral import (
    FULL,
    NEAR_SPECTRUM_RADIUS,
    SPECTRUM_TOLERANCE,
    ZERO_SUBSPACE,
    ReciprocalReport,
    SpectrumClassification,
    VariationReport,
    bv_check,
    classify_point,
    reciprocal_spectrum_check,
    resolvent_apply,
    spectral_gap,
)
from .volterra import IdentityReport, volterra_apply, volterra_identity_check

__version__ = "0.1.0"

__all__ = [
    "AbscissaEstimate",
    "BoundednessProbe",
    "CoefficientRule",
    "DirichletPolynomial",
    "DomainError",
    "DynamicsReport",
    "Estimate",
    "FULL",
    "GridSpec",
    "GrowthReport",
    "HalfPlanePoint",
    "IdentityReport",
    "Multiplier",
    "NEAR_SPECTRUM_RADIUS",
    "ReciprocalReport",
    "SPECTRUM_TOLERANCE",
    "SeminormEstimate",
    "SpectralError",
    "SpectrumClassification",
    "TailBound",
    "VariationReport",
    "ZERO",
    "ZERO_SUBSPACE",
    "add",
    "apply",
    "boundary_values",
    "bracket_sigma_u",
    "bv_check",
    "cesaro_mean",
    "check_growth",
    "classify_point",
    "coefficient_close",
    "compose",
    "derivative_multiplier",
    "differentiate",
    "dirichlet_multiply",
    "ergodicity_diagnostic",
    "estimate_sigma_a",
    "estimate_sigma_c",
    "eta_rule",
    "evaluate",
    "identity_multiplier",
    "integrate",
    "integration_multiplier",
    "moebius_rule",
    "monomial",
    "normalized_power_norm",
    "ones_rule",
    "partial_sum",
    "power_apply",
    "reciprocal_spectrum_check",
    "resolvent_apply",
    "scale",
    "seminorm",
    "sigma_a_estimate",
    "sigma_c_estimate",
    "spectral_gap",
    "summation_by_parts",
    "table_rule",
    "tail_bound_monotone",
    "truncate",
    "truncation_for_tolerance",
    "volterra_apply",
    "volterra_identity_check",
    "zeta_shift_rule",
]
