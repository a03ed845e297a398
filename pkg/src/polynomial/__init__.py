# 多项式引擎
from .aface import AFaceMethod, is_aface, positive_weight, validate_monomial_free
from .groebner import buchberger, is_groebner, is_reduced, normal_form, spoly
from .ordering import EliminationOrdering, Monomial, WeightedOrdering, compare, standard_ordering
from .parser import parse_polynomial, parse_polynomials, t_variables, tokenize, variable_names
from .ring import (
    Ideal,
    PolynomialRing,
    format_polynomial,
    is_homogeneous,
    is_weighted_homogeneous,
    monomial_degree,
    restrict_to_face,
    strip_variables,
)
from .saturation import (
    choose_saturation_order,
    contains_monomial_rabinowitsch,
    ideal_quotient,
    intersect_ideals,
    saturate_iterated_quotient,
    saturate_product,
    saturate_stepwise,
    saturate_variable,
)

__all__ = [
    "AFaceMethod",
    "is_aface",
    "positive_weight",
    "validate_monomial_free",
    "buchberger",
    "is_groebner",
    "is_reduced",
    "normal_form",
    "spoly",
    "EliminationOrdering",
    "Monomial",
    "WeightedOrdering",
    "compare",
    "standard_ordering",
    "parse_polynomial",
    "parse_polynomials",
    "t_variables",
    "tokenize",
    "variable_names",
    "Ideal",
    "PolynomialRing",
    "format_polynomial",
    "is_homogeneous",
    "is_weighted_homogeneous",
    "monomial_degree",
    "restrict_to_face",
    "strip_variables",
    "choose_saturation_order",
    "contains_monomial_rabinowitsch",
    "ideal_quotient",
    "intersect_ideals",
    "saturate_iterated_quotient",
    "saturate_product",
    "saturate_stepwise",
    "saturate_variable",
]
