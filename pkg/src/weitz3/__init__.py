"""Exact computation in the algebra of constants of the nilpotency-3
triangular (Weitzenboeck) derivation: generators, path-monomial bases,
polarization, and rewriting of constants in the generators."""

from .decompose import (
    GenExpr,
    GenName,
    decompose,
    expand,
    generator_poly,
    generators,
    reduce_multilinear,
    restitute_factor,
)
from .derivation import apply_delta, apply_sigma, is_constant, nilpotency_index
from .errors import (
    BadIndices,
    InternalInvariantViolation,
    LengthMismatch,
    NotAConstant,
    NotAPathMonomial,
    NotHomogeneous,
    NotMultilinear,
    NotNilpotent,
    PolySyntaxError,
    RingMismatch,
    SubscriptOutOfRange,
    Weitz3Error,
    WrongRingKind,
    ZeroPolynomial,
)
from .families import (
    BasisElement,
    FamilyElement,
    build_F,
    build_G,
    phi,
    theta_basis,
    theta_ring,
)
from .jordan import (
    ExactMatrix,
    JordanType,
    delta_tensor_matrix,
    exact_rank,
    jordan_type_of_nilpotent,
    kron_jordan,
    mu,
)
from .paths import enumerate_paths, is_path_word, path_counts, word_to_monomial
from .polar import evaluate_eps, polarize, restitute
from .poly import (
    Monomial,
    Polynomial,
    RingDesc,
    RingKind,
    Variable,
    base_ring,
    monomials_of_degree,
    parse_poly,
    polarized_ring,
)

__version__ = "0.1.0"

__all__ = [
    "BadIndices",
    "BasisElement",
    "ExactMatrix",
    "FamilyElement",
    "GenExpr",
    "GenName",
    "InternalInvariantViolation",
    "JordanType",
    "LengthMismatch",
    "Monomial",
    "NotAConstant",
    "NotAPathMonomial",
    "NotHomogeneous",
    "NotMultilinear",
    "NotNilpotent",
    "PolySyntaxError",
    "Polynomial",
    "RingDesc",
    "RingKind",
    "RingMismatch",
    "SubscriptOutOfRange",
    "Variable",
    "Weitz3Error",
    "WrongRingKind",
    "ZeroPolynomial",
    "apply_delta",
    "apply_sigma",
    "base_ring",
    "build_F",
    "build_G",
    "decompose",
    "delta_tensor_matrix",
    "enumerate_paths",
    "evaluate_eps",
    "exact_rank",
    "expand",
    "generator_poly",
    "generators",
    "is_constant",
    "is_path_word",
    "jordan_type_of_nilpotent",
    "kron_jordan",
    "monomials_of_degree",
    "mu",
    "nilpotency_index",
    "parse_poly",
    "path_counts",
    "phi",
    "polarize",
    "polarized_ring",
    "reduce_multilinear",
    "restitute",
    "restitute_factor",
    "theta_basis",
    "theta_ring",
    "word_to_monomial",
]
