"""Exact exponential sums of symmetric Boolean functions.

Computes S(n) for sums of elementary symmetric polynomials over GF(2), finds
the minimal homogeneous integer linear recurrence those sequences satisfy via
exact cyclotomic-integer vanishing tests, and evaluates the exact limiting
correlation and the oscillating asymptotic expansion with its error term.
"""

from .asymptotics import (
    DEFAULT_PRECISION,
    MainTermProfile,
    PrecisionConfig,
    asymptotic_value,
    error_table,
    error_term,
    is_asymptotically_balanced,
    limit_correlation,
    limit_correlation_enumerated,
    limit_correlation_nested,
    main_term,
    main_term_exact,
    main_term_profile,
)
from .bitcombinatorics import (
    R_MAX_DEFAULT,
    DegreeSet,
    StructureParams,
    binary_weight,
    binom_parity,
    bits_of,
    or_merge,
    sign_exponent,
    sign_exponents,
    structure_params,
)
from .cyclotomic import (
    CyclotomicInt,
    ScaledCoefficient,
    alternating_orbit_sum,
    closed_form_coefficient,
    is_zero_orbit,
    orbit_sum,
    orbit_sums,
)
from .errors import (
    BoolsumError,
    DegenerateDegreeSetError,
    PrecisionError,
    ResourceLimitError,
)
from .expsum import (
    N_MAX_BRUTEFORCE,
    SEQUENCE_CROSSOVER,
    ExpSumSequence,
    correlation,
    exp_sum,
    exp_sum_bruteforce,
    find_balanced,
    sequence,
)
from .recurrence import (
    FactoredCharPoly,
    IntPolynomial,
    LinearRecurrence,
    degree_bounds,
    expand,
    full_charpoly,
    minimal_charpoly,
    minimal_recurrence,
    minimal_recurrence_oracle,
    shifted_cyclotomic_factor,
    single_degree_charpoly,
    to_recurrence,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BoolsumError",
    "CyclotomicInt",
    "DEFAULT_PRECISION",
    "DegenerateDegreeSetError",
    "DegreeSet",
    "ExpSumSequence",
    "FactoredCharPoly",
    "IntPolynomial",
    "LinearRecurrence",
    "MainTermProfile",
    "N_MAX_BRUTEFORCE",
    "PrecisionConfig",
    "PrecisionError",
    "R_MAX_DEFAULT",
    "ResourceLimitError",
    "ScaledCoefficient",
    "SEQUENCE_CROSSOVER",
    "StructureParams",
    "alternating_orbit_sum",
    "asymptotic_value",
    "binary_weight",
    "binom_parity",
    "bits_of",
    "closed_form_coefficient",
    "correlation",
    "degree_bounds",
    "error_table",
    "error_term",
    "exp_sum",
    "exp_sum_bruteforce",
    "expand",
    "find_balanced",
    "full_charpoly",
    "is_asymptotically_balanced",
    "is_zero_orbit",
    "limit_correlation",
    "limit_correlation_enumerated",
    "limit_correlation_nested",
    "main_term",
    "main_term_exact",
    "main_term_profile",
    "minimal_charpoly",
    "minimal_recurrence",
    "minimal_recurrence_oracle",
    "or_merge",
    "orbit_sum",
    "orbit_sums",
    "sequence",
    "shifted_cyclotomic_factor",
    "sign_exponent",
    "sign_exponents",
    "single_degree_charpoly",
    "structure_params",
    "to_recurrence",
    "verify",
]
