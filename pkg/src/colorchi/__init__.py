"""Exact Poincare series and Euler-Poincare characteristics of graded
(color) Lie algebra cochain complexes, from dimension data alone.

The package works over a finite abelian grading group with a parity
split.  Closed-form product series are expanded exactly, Abel limits at
``t = -1`` are decided by componentwise pole analysis in the group ring,
a brute-force monomial enumeration serves as an independent oracle, and
pluggable divergent-series summation methods come with an axiom-checking
harness.
"""

from .groups import (
    CommutationFactor,
    Coords,
    FinAbGroup,
    GroupHom,
    IllDefinedParity,
    InvalidHom,
    NonPositiveFactor,
    ParityMap,
    TRIVIAL,
    ValidationReport,
    Z2,
    super_commutation_factor,
)
from .groupring import (
    GroupMismatch,
    GroupRingElem,
    OddOrder,
    Scalar,
    SuperElem,
    ZeroElement,
    character_values,
    is_zero_divisor_numeric,
    scaled_char,
)
from .series import (
    BadResidue,
    ClosedFormSeries,
    TruncatedSeries,
    lift_single_degree,
    tapered_eval,
)
from .cochain import (
    AlgebraSpec,
    InconsistentComplex,
    SyntheticComplex,
    check_one_plus_t,
    cochain_dim,
    complex_closed_form,
    default_order,
    with_module,
)
from .characteristic import (
    AbelNumericResult,
    CharResult,
    ComponentTrend,
    ConditionalExists,
    Diverges,
    Exists,
    NoVerdict,
    VARIANTS,
    Vanishes,
    Variant,
    abel_limit,
    abel_numeric,
    abel_numeric_complex,
    closed_form_for_variant,
    cohomology_characteristic,
    default_deltas,
    exact_complex_characteristic,
    module_dim_for_variant,
    required_order,
    vanishing_verdict,
    variant_dimension_condition,
    variant_hom,
)
from .summation import (
    AxiomOutcome,
    BudgetExceeded,
    MethodCharacteristic,
    MethodReport,
    NotSummable,
    SummationMethod,
    Summed,
    TermStream,
    abel_numeric_method,
    cesaro,
    check_method_properties,
    chi_method,
    compare_methods,
    euler_transform,
    summab_terms,
)
from .enumeration import (
    MonomialCount,
    TooLarge,
    VerifyResult,
    count_basis,
    verify_closed_form,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
