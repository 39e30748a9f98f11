"""Exact tools for certifying non-extendable isomorphisms between affine varieties."""

from .groebner import Budget, BudgetExceeded, GroebnerBasis, IdealPresentation, buchberger
from .order import MonomialOrder, compare, leading_monomial
from .poly import Polynomial, VarContext
from .textio import parse_polynomial, print_canonical

__all__ = [
    "Budget",
    "BudgetExceeded",
    "GroebnerBasis",
    "IdealPresentation",
    "MonomialOrder",
    "Polynomial",
    "VarContext",
    "buchberger",
    "compare",
    "leading_monomial",
    "parse_polynomial",
    "print_canonical",
]
