"""Exact arithmetic: finite fields, polynomials, series and linear algebra."""

from .field import FieldElement, FieldSpec, embedding, field_make, is_prime
from .linalg import (
    Matrix,
    hstack,
    kernel_basis,
    matrix_group_order,
    nullity,
    row_space_contains,
    rref,
    solve,
    vstack,
)
from .poly import Poly, RatFunc, poly_gcd, poly_squarefree
from .series import (
    PowerSeries,
    expand_ratfunc,
    series_artin_schreier_root,
    series_quadratic_root,
    series_sqrt,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "Matrix",
    "Poly",
    "PowerSeries",
    "RatFunc",
    "embedding",
    "expand_ratfunc",
    "field_make",
    "hstack",
    "is_prime",
    "kernel_basis",
    "matrix_group_order",
    "nullity",
    "poly_gcd",
    "poly_squarefree",
    "row_space_contains",
    "rref",
    "series_artin_schreier_root",
    "series_quadratic_root",
    "series_sqrt",
    "solve",
    "vstack",
]
