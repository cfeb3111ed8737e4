"""Jacobian rings of Calabi-Yau hypersurfaces over exact rationals.

Core pipeline: parse a defining form f, take its Jacobian ideal, run
Buchberger, and read dimensions and products off the quotient; deform by
g of weight divisible by nu and redo everything without the grading; or
study the associated differential graded Lie algebra model.
"""

from .polys import (
    Monomial,
    ParseError,
    Polynomial,
    RingContext,
    degrevlex_key,
    monomials_of_weight,
    parse_polynomial,
    render_polynomial,
)
from .linalg import Span, rank_of, rref
from .groebner import (
    BudgetExceeded,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    is_zero_dimensional,
    normal_form,
    spolynomial,
    standard_monomials,
)
from .jacobian import (
    DeformedSubalgebraData,
    GradedQuotientData,
    SingularDeformationError,
    SingularInputError,
    deformed_subalgebra,
    graded_quotient,
    is_nonsingular,
    jacobian_gb,
    jacobian_ideal,
    primitive_basis,
    weight_of_or_none,
)
from .extended import (
    EClass,
    ExtendedAlgebra,
    PrimitiveClass,
    build_extended,
    build_extended_deformed,
    structure_constants,
    to_json_dict,
    verify_algebra_laws,
    verify_dimension_equality,
)
from .dgla import (
    DEL,
    E,
    DerivationElement,
    FElement,
    GradedPiece,
    TPolynomial,
    TruncationError,
    bracket_L,
    cohomology_dims,
    cohomology_report,
    d_f_apply,
    d_f_apply_F,
    graded_piece,
    render_derivation,
    render_f_element,
    render_t_polynomial,
    schouten_bracket_F,
    verify_shifted_differential,
)

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "ParseError",
    "Polynomial",
    "RingContext",
    "degrevlex_key",
    "monomials_of_weight",
    "parse_polynomial",
    "render_polynomial",
    "Span",
    "rank_of",
    "rref",
    "BudgetExceeded",
    "GroebnerBasis",
    "MonomialOrder",
    "buchberger",
    "is_zero_dimensional",
    "normal_form",
    "spolynomial",
    "standard_monomials",
    "DeformedSubalgebraData",
    "GradedQuotientData",
    "SingularDeformationError",
    "SingularInputError",
    "deformed_subalgebra",
    "graded_quotient",
    "is_nonsingular",
    "jacobian_gb",
    "jacobian_ideal",
    "primitive_basis",
    "weight_of_or_none",
    "EClass",
    "ExtendedAlgebra",
    "PrimitiveClass",
    "build_extended",
    "build_extended_deformed",
    "structure_constants",
    "to_json_dict",
    "verify_algebra_laws",
    "verify_dimension_equality",
    "DEL",
    "E",
    "DerivationElement",
    "FElement",
    "GradedPiece",
    "TPolynomial",
    "TruncationError",
    "bracket_L",
    "cohomology_dims",
    "cohomology_report",
    "d_f_apply",
    "d_f_apply_F",
    "graded_piece",
    "render_derivation",
    "render_f_element",
    "render_t_polynomial",
    "schouten_bracket_F",
    "verify_shifted_differential",
    "__version__",
]
