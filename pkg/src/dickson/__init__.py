"""Exact arithmetic for Dickson polynomials and their relatives.

The package evaluates and tabulates Dickson polynomials of the first
kind and of kind (k+1) over the integers, the rationals, prime fields,
and their extensions, together with the trace-power, Waring, Carlitz,
and multivariate machinery they rest on.  Every identity the library
exposes can be re-checked at runtime through randomized verification
suites (`dickson.verify`) or from the command line (`dickson verify`).
"""

from .bench import BenchRecord, render_csv, run_bench
from .families import (
    DicksonSpec,
    SymmetricData,
    carlitz_power_sum,
    chebyshev_T,
    dickson_closed,
    dickson_eval_fast,
    dickson_first,
    dickson_genfun,
    dickson_kind,
    dickson_kind_closed,
    dickson_kind_eval_fast,
    dickson_kind_sequence,
    elementary_symmetric,
    family_terms,
    kind_k_functional_rhs,
    multivariate_dickson,
    multivariate_genfun,
    multivariate_oracle,
    waring_power_sum,
)
from .linalg import (
    CharData2,
    CharData3,
    SmallMatrix,
    char_data,
    mat_mul,
    mat_pow,
    trace_power_coefficient,
    trace_power_formula,
    trace_sequence_3x3,
)
from .numtheory import (
    PermutationVerdict,
    brewer_sum,
    is_permutation,
    legendre_symbol,
    monomial_permutation,
)
from .poly import (
    Polynomial,
    TruncatedSeries,
    poly_compose,
    poly_derivative,
    poly_eval,
    render_human,
    render_latex,
    series_from_rational,
)
from .rings import (
    GF,
    QQ,
    ZZ,
    BoundExceededError,
    ExtensionField,
    FpElement,
    FqElement,
    IntegerRing,
    PrimeField,
    RationalField,
    Ring,
    RingMismatchError,
    ff_inv,
    ff_pow,
    find_irreducible,
    is_prime,
    rational_normalize,
    ring_of,
)
from .verify import (
    Counterexample,
    VerificationReport,
    run_suite,
    run_suites,
    set_corruption,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord", "render_csv", "run_bench",
    "DicksonSpec", "SymmetricData", "carlitz_power_sum", "chebyshev_T",
    "dickson_closed", "dickson_eval_fast", "dickson_first", "dickson_genfun",
    "dickson_kind", "dickson_kind_closed", "dickson_kind_eval_fast",
    "dickson_kind_sequence", "elementary_symmetric", "family_terms",
    "kind_k_functional_rhs", "multivariate_dickson", "multivariate_genfun",
    "multivariate_oracle", "waring_power_sum",
    "CharData2", "CharData3", "SmallMatrix", "char_data", "mat_mul", "mat_pow",
    "trace_power_coefficient", "trace_power_formula", "trace_sequence_3x3",
    "PermutationVerdict", "brewer_sum", "is_permutation", "legendre_symbol",
    "monomial_permutation",
    "Polynomial", "TruncatedSeries", "poly_compose", "poly_derivative",
    "poly_eval", "render_human", "render_latex", "series_from_rational",
    "GF", "QQ", "ZZ", "BoundExceededError", "ExtensionField", "FpElement",
    "FqElement", "IntegerRing", "PrimeField", "RationalField", "Ring",
    "RingMismatchError", "ff_inv", "ff_pow", "find_irreducible", "is_prime",
    "rational_normalize", "ring_of",
    "Counterexample", "VerificationReport", "run_suite", "run_suites",
    "set_corruption",
    "__version__",
]
