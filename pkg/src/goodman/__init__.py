"""Exact computation of Goodman's primary-complexity values for predicate bases."""

from .basis import (
    BasisParseError,
    BasisSpec,
    PredicateSpec,
    basis_value,
    format_basis,
    parse_basis,
)
from .complexity import (
    ComplexityBreakdown,
    Verdict,
    breakdown,
    diagonal_weights,
    expand_schema,
    form_patterns,
    gf_table,
    matrix_identity_holds,
    svenonius_forms,
    svenonius_precheck,
    v_k,
    v_k_alternating,
    v_total,
    v_total_double_sum,
)
from .reduction import (
    CoefficientVector,
    ReductionChain,
    coeff_A,
    coeff_C,
    full_chain,
    prop5_decompose,
    prop6_decompose,
    push_down,
    reduce_to_level,
)
from .stirling import (
    ENUMERATION_CAP,
    OracleLimitError,
    TriangularTable,
    bell,
    gs_table,
    restricted_growth_strings,
    stirling2_closed,
    stirling2_enumerate,
    stirling2_recurrence,
)

__version__ = "0.1.0"
