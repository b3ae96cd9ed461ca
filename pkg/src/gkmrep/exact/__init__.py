"""Exact rational arithmetic: polynomials, linear forms, linear algebra."""

from .linalg import Echelon, Matrix, Span, dense, solve_linear_system, sparse, subspace_ops
from .poly import (
    DimensionError,
    InvalidWeightError,
    LinearForm,
    Polynomial,
    as_rational,
    divisible_by_linear,
    eval_poly,
    format_rational,
    monomials,
    poly_arith,
    restrict_to_hyperplane,
)

__all__ = [
    "DimensionError",
    "Echelon",
    "InvalidWeightError",
    "LinearForm",
    "Matrix",
    "Polynomial",
    "Span",
    "as_rational",
    "dense",
    "divisible_by_linear",
    "eval_poly",
    "format_rational",
    "monomials",
    "poly_arith",
    "restrict_to_hyperplane",
    "solve_linear_system",
    "sparse",
    "subspace_ops",
]
