"""Isomorphism pairs and the non-extendability checkers.

Two constructions are supported, both substituting only the first context
variable ``x1``:

* power pairs, ``x1 -> x1^k`` between ``<x1 - f^k, extras>`` and
  ``<x1 - f(x1^k, ...), extras>``;
* product pairs, ``x1 -> x1*f2`` between ``<x1 - f1*f2, extras>`` and
  ``<x1 - f1(x1*f2, ...), extras>``.

Every checker returns a :class:`CriterionReport`.  The criteria are
sufficient conditions only, so ``CONDITION_NOT_MET`` never asserts that the
two embeddings are equivalent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from itertools import permutations
from math import factorial
from typing import Sequence

from . import groebner
from .groebner import Budget, BudgetExceeded, IdealPresentation
from .newton import HadasResult, hadas_coordinate_test, newton_polytope
from .order import MonomialOrder, compare, leading_monomial
from .poly import Polynomial, VarContext, substitute, try_divide
from .textio import format_monomial


class HypothesisError(ValueError):
    """An input violates a hypothesis of the construction."""


class Verdict(str, enum.Enum):
    NON_EXTENDABLE = "NonExtendable"
    CONDITION_NOT_MET = "ConditionNotMet"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class AlgebraMap:
    context: VarContext
    images: dict

    def __call__(self, p: Polynomial) -> Polynomial:
        return substitute(p, self.images)


class Construction(str, enum.Enum):
    POWER = "PowerPair"
    PRODUCT = "ProductPair"


@dataclass(frozen=True)
class IsoPair:
    source: IdealPresentation
    target: IdealPresentation
    map: AlgebraMap
    construction: Construction
    data: dict  # PowerPair: f, k; ProductPair: f1, f2
    extra_relations: tuple = ()

    @property
    def context(self) -> VarContext:
        return self.source.context

    @property
    def x1(self) -> str:
        return self.context.names[0]

    def source_generator(self) -> Polynomial:
        return self.source.generators[0]

    def target_generator(self) -> Polynomial:
        return self.target.generators[0]


@dataclass
class CriterionReport:
    criterion: str
    verdict: Verdict
    order_used: MonomialOrder | None = None
    gb_leading_monomials: list = field(default_factory=list)
    gb_elements: list = field(default_factory=list)
    hadas_witness: tuple | None = None
    hadas_certificate: object | None = None
    divisibility_witness: Polynomial | None = None
    surjectivity_residue: Polynomial | None = None
    failed_clause: str | None = None
    colliding_monomial: tuple | None = None
    notes: list = field(default_factory=list)
    budget_exceeded: bool = False

    @property
    def non_extendable(self) -> bool:
        return self.verdict is Verdict.NON_EXTENDABLE


@dataclass(frozen=True)
class OrderSearch:
    """Which pure lex orders to try: one fixed order, or all rankings when ``n <= cap``."""

    fixed: MonomialOrder | None = None
    cap: int = 6

    @classmethod
    def all_permutations(cls, cap: int = 6) -> "OrderSearch":
        return cls(None, cap)

    def orders(self, context: VarContext) -> list:
        if self.fixed is not None:
            if self.fixed.context != context:
                raise ValueError("fixed order is over a different context")
            return [self.fixed]
        if context.arity > self.cap:
            raise ValueError(
                f"{factorial(context.arity)} orders for {context.arity} variables exceeds "
                f"the permutation cap {self.cap}; pass a fixed order instead"
            )
        return [MonomialOrder(context, r) for r in permutations(range(context.arity))]


ALL_ORDERS = OrderSearch.all_permutations()


# -- construction --------------------------------------------------------------------


def _check_extras(extra: Sequence[Polynomial], context: VarContext, x1: str) -> tuple:
    out = []
    for e in extra:
        if e.context != context:
            raise HypothesisError("extra relations must share the context of f")
        if e.occurs(x1):
            raise HypothesisError(
                f"extra relation {e} mentions {x1}; the remaining generators must be "
                f"polynomials in the other variables only"
            )
        out.append(e)
    return tuple(out)


def build_power_pair(f: Polynomial, k: int, extra: Sequence[Polynomial] = ()) -> IsoPair:
    ctx = f.context
    x1 = ctx.names[0]
    if not f.occurs(x1):
        raise HypothesisError(f"hypothesis violated: {x1} must actually occur in f")
    if not isinstance(k, int) or k < 2:
        raise HypothesisError(f"hypothesis violated: k >= 2 is required, got k = {k}")
    extras = _check_extras(extra, ctx, x1)
    X1 = Polynomial.var(ctx, x1)
    phi = AlgebraMap(ctx, {x1: X1 ** k})
    source = IdealPresentation(ctx, (X1 - f ** k,) + extras)
    target = IdealPresentation(ctx, (X1 - phi(f),) + extras)
    return IsoPair(source, target, phi, Construction.POWER, {"f": f, "k": k}, extras)


def build_product_pair(f1: Polynomial, f2: Polynomial, extra: Sequence[Polynomial] = ()) -> IsoPair:
    ctx = f1.context
    if f2.context != ctx:
        raise HypothesisError("f1 and f2 must share a context")
    x1 = ctx.names[0]
    if not f1.occurs(x1):
        raise HypothesisError(f"hypothesis violated: {x1} must actually occur in f1")
    if f2.is_constant():
        raise HypothesisError("hypothesis violated: f2 must not be a constant")
    if f2.occurs(x1):
        raise HypothesisError(f"hypothesis violated: f2 must be a polynomial in the variables other than {x1}")
    extras = _check_extras(extra, ctx, x1)
    X1 = Polynomial.var(ctx, x1)
    phi = AlgebraMap(ctx, {x1: X1 * f2})
    source = IdealPresentation(ctx, (X1 - f1 * f2,) + extras)
    target = IdealPresentation(ctx, (X1 - phi(f1),) + extras)
    return IsoPair(source, target, phi, Construction.PRODUCT, {"f1": f1, "f2": f2}, extras)


# -- homomorphism and surjectivity ---------------------------------------------------------


def verify_hom_surjective(pair: IsoPair, budget: Budget = groebner.DEFAULT_BUDGET) -> CriterionReport:
    """Certify that the substitution is an onto homomorphism of the quotient algebras."""
    report = CriterionReport("homomorphism", Verdict.NON_EXTENDABLE)
    phi = pair.map
    tgen = pair.target_generator()
    cof = try_divide(phi(pair.source_generator()), tgen)
    if cof is None:
        report.verdict = Verdict.INCONCLUSIVE
        report.failed_clause = "homomorphism"
        report.notes.append("image of the source x1-generator is not a multiple of the target x1-generator")
        return report
    report.divisibility_witness = cof
    for e in pair.extra_relations:
        if phi(e) != e:
            report.verdict = Verdict.INCONCLUSIVE
            report.failed_clause = "homomorphism"
            report.notes.append(f"extra relation {e} is not fixed by the map")
            return report

    X1 = Polynomial.var(pair.context, pair.x1)
    inner = pair.data["f"] if pair.construction is Construction.POWER else pair.data["f1"]
    witness = X1 - substitute(inner, {pair.x1: phi.images[pair.x1]})
    order = MonomialOrder.default(pair.context)
    try:
        gb = groebner.buchberger(pair.target, order, budget)
    except BudgetExceeded as exc:
        report.verdict = Verdict.INCONCLUSIVE
        report.budget_exceeded = True
        report.notes.append(f"surjectivity check stopped: {exc}")
        return report
    residue = gb.reduce(witness)
    report.surjectivity_residue = residue
    if not residue.is_zero():
        report.verdict = Verdict.INCONCLUSIVE
        report.failed_clause = "surjectivity"
        report.notes.append("surjectivity witness does not reduce to zero modulo the target ideal")
    return report


def _attach_hom(report: CriterionReport, hom: CriterionReport) -> CriterionReport:
    report.divisibility_witness = hom.divisibility_witness
    report.surjectivity_residue = hom.surjectivity_residue
    if hom.verdict is not Verdict.NON_EXTENDABLE:
        report.notes.extend(hom.notes)
        if report.verdict is Verdict.NON_EXTENDABLE:
            report.verdict = Verdict.INCONCLUSIVE
            report.notes.append("criterion satisfied but the map could not be certified as an onto homomorphism")
    return report


# -- Gröbner leading-monomial criteria ----------------------------------------------------------


def _all_positive(m: tuple) -> bool:
    return all(e > 0 for e in m)


def _gb_scan(pair: IsoPair, orders: OrderSearch, budget: Budget, height_bound: Polynomial | None, name: str) -> CriterionReport:
    report = CriterionReport(name, Verdict.CONDITION_NOT_MET)
    ctx = pair.context
    hit_budget = False
    positivity_failures = []
    height_failures = []
    for order in orders.orders(ctx):
        try:
            gb = groebner.buchberger(pair.target, order, budget)
        except BudgetExceeded as exc:
            hit_budget = True
            report.notes.append(f"order {order}: {exc}")
            continue
        lms = gb.leading_monomials()
        missing = next((m for m in lms if not _all_positive(m)), None)
        if missing is not None:
            positivity_failures.append((order, missing))
            continue
        if height_bound is not None:
            collide = None
            for m in lms:
                for t in height_bound.terms:
                    if compare(m, t, order) <= 0:
                        collide = (m, t)
                        break
                if collide:
                    break
            if collide is not None:
                height_failures.append((order, collide))
                continue
        report.verdict = Verdict.NON_EXTENDABLE
        report.order_used = order
        report.gb_leading_monomials = lms
        report.gb_elements = list(gb.elements)
        report.failed_clause = None
        return report

    for order, m in positivity_failures:
        report.notes.append(
            f"order {order}: leading monomial {format_monomial(m, ctx)} misses a variable"
        )
    for order, (m, t) in height_failures:
        report.notes.append(
            f"order {order}: leading monomial {format_monomial(m, ctx)} is not higher than "
            f"{format_monomial(t, ctx)} from x1*f2"
        )
    if height_failures:
        report.failed_clause = "height"
        report.colliding_monomial = height_failures[0][1][1]
        report.order_used = height_failures[0][0]
    elif positivity_failures:
        report.failed_clause = "positivity"
        report.order_used = positivity_failures[0][0]
    if hit_budget and report.verdict is not Verdict.NON_EXTENDABLE:
        report.verdict = Verdict.INCONCLUSIVE
        report.budget_exceeded = True
    return report


def check_thm_1_1(pair: IsoPair, orders: OrderSearch = ALL_ORDERS, budget: Budget = groebner.DEFAULT_BUDGET) -> CriterionReport:
    """Power pair: some lex order gives every reduced-basis element an all-positive leading monomial."""
    if pair.construction is not Construction.POWER:
        raise HypothesisError("the power criterion needs a power pair")
    report = _gb_scan(pair, orders, budget, None, "power-groebner")
    return _attach_hom(report, verify_hom_surjective(pair, budget))


def check_thm_1_3(pair: IsoPair, orders: OrderSearch = ALL_ORDERS, budget: Budget = groebner.DEFAULT_BUDGET) -> CriterionReport:
    """Product pair: all-positive leading monomials, each strictly above every monomial of x1*f2."""
    if pair.construction is not Construction.PRODUCT:
        raise HypothesisError("the product criterion needs a product pair")
    bound = Polynomial.var(pair.context, pair.x1) * pair.data["f2"]
    report = _gb_scan(pair, orders, budget, bound, "product-groebner")
    report.notes.append("height clause uses strict comparison")
    return _attach_hom(report, verify_hom_surjective(pair, budget))


# -- Newton polytope criteria -------------------------------------------------------------


def check_cor_1_2(f: Polynomial, k: int, budget: Budget = groebner.DEFAULT_BUDGET) -> CriterionReport:
    """Power pair for a single generator: f has a vertex off every coordinate hyperplane."""
    pair = build_power_pair(f, k)
    hadas = hadas_coordinate_test(f)
    report = CriterionReport("power-newton", Verdict.CONDITION_NOT_MET)
    if hadas.passes:
        report.failed_clause = "vertex"
        report.notes.append("every vertex of the Newton polytope of f lies on a coordinate hyperplane")
    else:
        report.verdict = Verdict.NON_EXTENDABLE
        report.hadas_witness = hadas.witness
        report.hadas_certificate = hadas.certificate
    return _attach_hom(report, verify_hom_surjective(pair, budget))


def product_target(f1: Polynomial, f2: Polynomial) -> Polynomial:
    """``x1 - f1(x1*f2, x2, ..., xn)``."""
    x1 = f1.context.names[0]
    X1 = Polynomial.var(f1.context, x1)
    return X1 - substitute(f1, {x1: X1 * f2})


def check_cor_1_4(f1: Polynomial, f2: Polynomial, orders: OrderSearch = ALL_ORDERS, budget: Budget = groebner.DEFAULT_BUDGET) -> CriterionReport:
    """Product pair for a single generator ``p = x1 - f1(x1*f2, ...)``.

    Needs a vertex of p off every coordinate hyperplane and, for some lex
    order, a leading monomial of p strictly above every monomial of x1*f2.
    """
    pair = build_product_pair(f1, f2)
    p = pair.target_generator()
    report = CriterionReport("product-newton", Verdict.CONDITION_NOT_MET)
    hadas = hadas_coordinate_test(p)
    clauses_ok = True
    if hadas.passes:
        clauses_ok = False
        report.failed_clause = "vertex"
        report.notes.append("every vertex of the Newton polytope of p lies on a coordinate hyperplane")
    else:
        report.hadas_witness = hadas.witness
        report.hadas_certificate = hadas.certificate

    bound = (Polynomial.var(p.context, pair.x1) * f2).terms
    found = None
    first_collision = None
    for order in orders.orders(p.context):
        lm, _ = leading_monomial(p, order)
        blocker = next((t for t in bound if compare(lm, t, order) <= 0), None)
        if blocker is None:
            found = (order, lm)
            break
        if first_collision is None:
            first_collision = (order, lm, blocker)
    if found is None:
        clauses_ok = False
        if report.failed_clause is None:
            report.failed_clause = "height"
        order, lm, blocker = first_collision
        report.colliding_monomial = blocker
        report.notes.append(
            f"no lex order puts the leading monomial of p strictly above every monomial of x1*f2 "
            f"(e.g. order {order}: {format_monomial(lm, p.context)} vs {format_monomial(blocker, p.context)})"
        )
    else:
        report.order_used, lm = found
        report.gb_leading_monomials = [lm]
        report.gb_elements = [p]
    if clauses_ok:
        report.verdict = Verdict.NON_EXTENDABLE
    report.notes.append("height clause is searched over lex orders independently of the vertex clause")
    return _attach_hom(report, verify_hom_surjective(pair, budget))


# -- re-verification ------------------------------------------------------------------------


def reverify(report: CriterionReport, pair: IsoPair) -> bool:
    """Check a NonExtendable report's certificates without trusting how they were produced."""
    if report.verdict is not Verdict.NON_EXTENDABLE:
        return False
    phi = pair.map
    if report.divisibility_witness is None:
        return False
    if pair.target_generator() * report.divisibility_witness != phi(pair.source_generator()):
        return False
    if report.surjectivity_residue is None or not report.surjectivity_residue.is_zero():
        return False
    if report.criterion in ("power-groebner", "product-groebner"):
        order = report.order_used
        elems = report.gb_elements
        if order is None or not elems:
            return False
        if not groebner.satisfies_buchberger_criterion(elems, order):
            return False
        gb = groebner.GroebnerBasis(order, tuple(elems))
        if not all(gb.contains(g) for g in pair.target.generators):
            return False
        # every element must lie in the target ideal: check via the ideal's own basis
        target_gb = groebner.buchberger(pair.target, order)
        if not all(target_gb.contains(e) for e in elems):
            return False
        lms = [leading_monomial(e, order)[0] for e in elems]
        if not all(_all_positive(m) for m in lms):
            return False
        if report.criterion == "product-groebner":
            bound = (Polynomial.var(pair.context, pair.x1) * pair.data["f2"]).terms
            if any(compare(m, t, order) <= 0 for m in lms for t in bound):
                return False
        return True
    if report.criterion in ("power-newton", "product-newton"):
        poly = pair.data["f"] if report.criterion == "power-newton" else pair.target_generator()
        h = HadasResult(False, report.hadas_witness, report.hadas_certificate, newton_polytope(poly.terms))
        if not h.verify(poly):
            return False
        if report.criterion == "product-newton":
            order = report.order_used
            lm, _ = leading_monomial(poly, order)
            bound = (Polynomial.var(pair.context, pair.x1) * pair.data["f2"]).terms
            return all(compare(lm, t, order) > 0 for t in bound)
        return True
    return False


def rescaled(pair: IsoPair, factors: Sequence) -> IsoPair:
    """Same pair with target generators multiplied by nonzero rationals (for invariance tests)."""
    gens = tuple(g.scale(c) for g, c in zip(pair.target.generators, factors))
    return replace(pair, target=IdealPresentation(pair.context, gens))
