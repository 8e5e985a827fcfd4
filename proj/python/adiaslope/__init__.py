"""Exact-arithmetic adiabatic slope stability for projectivized vector bundles.

All numeric values cross the boundary as fractions.Fraction; the engine
itself works in exact rational arithmetic throughout.
"""

from ._core import (  # noqa: F401
    BracketExpansions,
    BundleData,
    CrosscheckEntry,
    CrosscheckReport,
    DFReport,
    EngineError,
    FiberedClass,
    GradedClass,
    IntersectionRing,
    KPolynomial,
    SchemaError,
    SemanticError,
    SlopeSet,
    StabilityCall,
    TestConfigInput,
    adiabatic_power,
    bracket_expansions,
    canonicalize_problem,
    closed_form_coefficient,
    crosscheck,
    df_report,
    dual,
    euler_characteristic_surface,
    fiber_mul,
    fibered_chern_of_twist,
    fibered_inverse,
    filtration_combine,
    futaki_k_polynomial,
    hyperplane_power,
    integrate,
    integrate_total,
    lift,
    line_bundle,
    make_surface_ring,
    mul,
    pushforward,
    run_problem,
    segre_total,
    slope,
    stability_verdict,
    tensor_by_line,
    total_space_c1,
    trivial_bundle,
    whitney_sum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
