"""Footprint bound analysis for multivariate polynomials over finite grids."""

from .analysis import (
    Classification,
    FootprintReport,
    check_irreducible_corollary,
    check_necessary_conditions,
    classify,
    extract_linear_factors,
    footprint_bound,
    is_monomial_ordering_invariant,
    omega_and_max_monomials,
    possible_leading_monomials,
    schwartz_zippel_bound,
    split_check,
)
from .constructions import (
    hermitian_polynomial,
    search_attaining,
    trace_difference_polynomial,
    trivial_polynomial,
)
from .field import FieldElement, FieldSpec
from .grid import Grid
from .ordering import MonomialOrder, builtin_orders, compare, monomial_gcd
from .polynomial import Polynomial, divide, reduce_mod_grid

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "FieldElement",
    "FieldSpec",
    "FootprintReport",
    "Grid",
    "MonomialOrder",
    "Polynomial",
    "builtin_orders",
    "check_irreducible_corollary",
    "check_necessary_conditions",
    "classify",
    "compare",
    "divide",
    "extract_linear_factors",
    "footprint_bound",
    "hermitian_polynomial",
    "is_monomial_ordering_invariant",
    "monomial_gcd",
    "omega_and_max_monomials",
    "possible_leading_monomials",
    "reduce_mod_grid",
    "schwartz_zippel_bound",
    "search_attaining",
    "split_check",
    "trace_difference_polynomial",
    "trivial_polynomial",
]
