"""Radii of close-to-convexity and starlikeness for planar harmonic maps.

The library works with normalized harmonic mappings f = h + conj(g) of
the unit disk whose coefficient moduli are bounded by one of three stock
families (koebe, convex, uniform) or given explicitly.  It computes the
largest r such that every dilated member f(rz)/r belongs to the
close-to-convex class cut out by |f_z - 1| < 1 - beta - |f_zbar|, checks
memberships numerically, certifies sharpness through witness Jacobians,
and evaluates the Bloch-Landau consequence for bounded harmonic maps.
"""

from .coefficients import (
    BoundFamily,
    CoefficientSeq,
    TailBound,
    koebe_bounds,
    convex_bounds,
    load_sequence,
    save_sequence,
    sequence_from_dict,
    sequence_to_dict,
    power_sums,
    weighted_sum,
    weighted_sum_limit,
)
from .maps import (
    EPS_EVAL,
    ClosedForm,
    EvaluationDomainError,
    HarmonicMap,
    UnsupportedOperation,
    identity_map,
)
from .extremals import (
    CONVEX_EXTREMAL_CONVEXITY_RADIUS,
    EXTREMALS,
    JacobianProfile,
    convex_extremal,
    convex_witness,
    convex_witness_jacobian,
    convex_witness_profile,
    get_extremal,
    harmonic_koebe,
    koebe_witness,
    koebe_witness_jacobian,
    koebe_witness_profile,
    one_term_extremal,
    power_sum_identities,
    uniform_witness,
    uniform_witness_jacobian,
    uniform_witness_profile,
)
from .membership import (
    BOUNDARY_TOL,
    GridSpec,
    MembershipReport,
    c_h2_numeric,
    coeff_condition,
    coefficient_growth_check,
    injectivity_oracle,
    starlike_scan,
)
from .radii import (
    BISECTION_TOL,
    NoRadiusError,
    RadiusReport,
    SharpnessReport,
    convex_family_radius,
    jacobian_roots,
    koebe_family_radius,
    radius_by_bisection,
    uniform_family_radius,
    verify_sharpness,
)
from .bloch import (
    BlochRow,
    MIN_BOUND,
    PRIOR_ESTIMATE_FACTOR,
    bloch_radius,
    bloch_table,
    bloch_table_csv,
    coefficient_bound,
    phi,
    psi,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # coefficients
    "BoundFamily", "CoefficientSeq", "TailBound", "koebe_bounds",
    "convex_bounds", "load_sequence", "save_sequence", "sequence_from_dict",
    "sequence_to_dict", "power_sums", "weighted_sum", "weighted_sum_limit",
    # maps
    "EPS_EVAL", "ClosedForm", "EvaluationDomainError", "HarmonicMap",
    "UnsupportedOperation", "identity_map",
    # extremals
    "CONVEX_EXTREMAL_CONVEXITY_RADIUS", "EXTREMALS", "JacobianProfile",
    "convex_extremal", "convex_witness", "convex_witness_jacobian",
    "convex_witness_profile", "get_extremal", "harmonic_koebe",
    "koebe_witness", "koebe_witness_jacobian", "koebe_witness_profile",
    "one_term_extremal", "power_sum_identities", "uniform_witness",
    "uniform_witness_jacobian", "uniform_witness_profile",
    # membership
    "BOUNDARY_TOL", "GridSpec", "MembershipReport", "c_h2_numeric",
    "coeff_condition", "coefficient_growth_check", "injectivity_oracle",
    "starlike_scan",
    # radii
    "BISECTION_TOL", "NoRadiusError", "RadiusReport", "SharpnessReport",
    "convex_family_radius", "jacobian_roots", "koebe_family_radius",
    "radius_by_bisection", "uniform_family_radius", "verify_sharpness",
    # bloch
    "BlochRow", "MIN_BOUND", "PRIOR_ESTIMATE_FACTOR", "bloch_radius",
    "bloch_table", "bloch_table_csv", "coefficient_bound", "phi", "psi",
]
