"""Exact-arithmetic toolkit for matrix-product codes over finite
commutative rings: ring towers, division-free matrix algebra, linear
codes with brute-force dual oracles, sufficient-condition checkers for
self-orthogonality and self-duality, certified combining matrices, and a
distance lower bound.
"""

from .code import LinearCode, hamming_weight, inner_product, span
from .constructions import (
    CertifiedMatrix,
    adiag1_matrix_a,
    adiag1_matrix_b,
    adiag3_matrix,
    block_adiag_matrix,
    diag1_matrix,
    prime_square_codes,
)
from .errors import (
    BudgetExceededError,
    CertificateError,
    HypothesisViolationError,
    InconsistentInputError,
    InvalidParameterError,
    NotApplicableError,
    NotInvertibleError,
    NotationError,
    RingCodesError,
    RingMismatchError,
    ShapeError,
    UndefinedDistanceError,
)
from .matrix import ANTI_DIAGONAL, DIAGONAL, OTHER, GramShape, Matrix
from .mpc import (
    CONDITION_IDS,
    EQUIVALENCE,
    SELF_DUAL,
    SELF_ORTHOGONAL,
    Conclusion,
    ConditionResult,
    MPCReport,
    MPCSpec,
    build_mpc,
    check_conditions,
    min_distance_lower_bound,
    mpc_dual_theorem,
    mpc_generator_matrix,
    row_code_min_distances,
    row_codes,
)
from .notation import (
    code_from_json_dict,
    code_to_json_dict,
    describe_code,
    format_code,
    format_element,
    format_matrix,
    format_ring,
    format_vector,
    matrix_from_json_dict,
    matrix_to_json_dict,
    parse_code,
    parse_element,
    parse_generators,
    parse_matrix,
    parse_ring,
    parse_vector,
)
from .ring import (
    DEFAULT_ENUMERATION_BUDGET,
    IntegerResidueRing,
    QuotientExtensionRing,
    Ring,
    RingElement,
    galois_ring,
    make_integer_residue_ring,
    make_quotient_extension,
)

__version__ = "0.1.0"

__all__ = [
    "ANTI_DIAGONAL",
    "BudgetExceededError",
    "CONDITION_IDS",
    "CertificateError",
    "CertifiedMatrix",
    "Conclusion",
    "ConditionResult",
    "DEFAULT_ENUMERATION_BUDGET",
    "DIAGONAL",
    "EQUIVALENCE",
    "GramShape",
    "HypothesisViolationError",
    "InconsistentInputError",
    "IntegerResidueRing",
    "InvalidParameterError",
    "LinearCode",
    "MPCReport",
    "MPCSpec",
    "Matrix",
    "NotApplicableError",
    "NotInvertibleError",
    "NotationError",
    "OTHER",
    "QuotientExtensionRing",
    "Ring",
    "RingCodesError",
    "RingElement",
    "RingMismatchError",
    "SELF_DUAL",
    "SELF_ORTHOGONAL",
    "ShapeError",
    "UndefinedDistanceError",
    "adiag1_matrix_a",
    "adiag1_matrix_b",
    "adiag3_matrix",
    "block_adiag_matrix",
    "build_mpc",
    "check_conditions",
    "code_from_json_dict",
    "code_to_json_dict",
    "describe_code",
    "diag1_matrix",
    "format_code",
    "format_element",
    "format_matrix",
    "format_ring",
    "format_vector",
    "galois_ring",
    "hamming_weight",
    "inner_product",
    "make_integer_residue_ring",
    "make_quotient_extension",
    "matrix_from_json_dict",
    "matrix_to_json_dict",
    "min_distance_lower_bound",
    "mpc_dual_theorem",
    "mpc_generator_matrix",
    "parse_code",
    "parse_element",
    "parse_generators",
    "parse_matrix",
    "parse_ring",
    "parse_vector",
    "prime_square_codes",
    "row_code_min_distances",
    "row_codes",
    "span",
]
