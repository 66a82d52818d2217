"""
Exact polynomial arithmetic over the rationals
"""
from .monomials import (
    Monomial, VariableSet, OrderKind, MonomialOrder, compare_monomials,
    monomial_mul, monomial_div, monomial_divides, monomial_lcm, monomials_coprime,
)
from .polynomial import (
    Polynomial, poly_add, poly_mul, leading_term, monic_form, dedupe_up_to_scalar,
)
from .parser import parse_polynomial, format_polynomial
from .division import Reducer, prepare_reducers, normal_form, normal_form_with, divide

__all__ = [
    "Monomial", "VariableSet", "OrderKind", "MonomialOrder", "compare_monomials",
    "monomial_mul", "monomial_div", "monomial_divides", "monomial_lcm", "monomials_coprime",
    "Polynomial", "poly_add", "poly_mul", "leading_term", "monic_form", "dedupe_up_to_scalar",
    "parse_polynomial", "format_polynomial",
    "Reducer", "prepare_reducers", "normal_form", "normal_form_with", "divide",
]
