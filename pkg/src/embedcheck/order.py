"""Pure lexicographic monomial orders given by a ranking of the variables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .poly import ContextMismatch, Monomial, Polynomial, VarContext


class OrderSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """Pure lex order; ``ranking`` lists context indices from least to greatest variable."""

    context: VarContext
    ranking: tuple

    def __post_init__(self):
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if sorted(ranking) != list(range(self.context.arity)):
            raise ValueError(f"ranking {ranking} is not a permutation of the context indices")
        # scan order for comparisons: greatest variable first
        object.__setattr__(self, "_scan", tuple(reversed(ranking)))

    @classmethod
    def default(cls, context: VarContext) -> "MonomialOrder":
        """First declared variable is the greatest, as in ``z<y<x`` for ``vars: x y z``."""
        return cls(context, tuple(reversed(range(context.arity))))

    @classmethod
    def from_names(cls, context: VarContext, least_to_greatest) -> "MonomialOrder":
        names = list(least_to_greatest)
        if sorted(names) != sorted(context.names) or len(set(names)) != len(names):
            raise OrderSyntaxError(
                f"order must list every variable of {context.names} exactly once, got {names}"
            )
        return cls(context, tuple(context.index(n) for n in names))

    @classmethod
    def parse(cls, context: VarContext, literal: str) -> "MonomialOrder":
        """Parse an order literal such as ``"z < y < x"`` (least first)."""
        names = [part.strip() for part in literal.split("<")]
        if any(not n for n in names):
            raise OrderSyntaxError(f"malformed order literal {literal!r}")
        for n in names:
            if n not in context:
                raise OrderSyntaxError(f"order literal names unknown variable {n!r}")
        return cls.from_names(context, names)

    def key(self, m: Monomial) -> tuple:
        """Sort key: larger key means larger monomial."""
        return tuple(m[i] for i in self._scan)

    def names(self) -> tuple:
        return tuple(self.context.names[i] for i in self.ranking)

    def literal(self) -> str:
        return "<".join(self.names())

    def __str__(self) -> str:
        return self.literal()

    def greatest(self) -> str:
        return self.context.names[self.ranking[-1]]


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    n = order.context.arity
    if len(m1) != n or len(m2) != n:
        raise ContextMismatch("monomial length does not match the order's context")
    for i in order._scan:
        a, b = m1[i], m2[i]
        if a != b:
            return -1 if a < b else 1
    return 0


def _check_order(p: Polynomial, order: MonomialOrder) -> None:
    if p.context != order.context:
        raise ContextMismatch(
            f"order is over {order.context.names}, polynomial over {p.context.names}"
        )


def leading_monomial(p: Polynomial, order: MonomialOrder) -> tuple:
    """``(monomial, coefficient)`` of the order-maximal term."""
    _check_order(p, order)
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    terms = p._terms
    m = max(terms, key=order.key)
    return m, terms[m]


def leading_coefficient(p: Polynomial, order: MonomialOrder) -> Fraction:
    return leading_monomial(p, order)[1]


def sorted_terms(p: Polynomial, order: MonomialOrder, descending: bool = True) -> list:
    _check_order(p, order)
    return sorted(p._terms.items(), key=lambda t: order.key(t[0]), reverse=descending)


def all_orders(context: VarContext) -> list:
    """Every pure lex order on the context, in lexicographic order of rankings."""
    return [MonomialOrder(context, r) for r in permutations(range(context.arity))]
