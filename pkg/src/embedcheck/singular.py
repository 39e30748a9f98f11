"""Gradient systems: unit-ideal certificates, rational common zeros, on-variety checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from . import groebner
from .groebner import Budget, GroebnerBasis, IdealPresentation
from .order import MonomialOrder
from .poly import Polynomial, VarContext, evaluate


class NotZeroDimensional(ValueError):
    """The lex basis lacks a pure-power leading monomial for some variable."""


def gradient(p: Polynomial) -> list:
    return [p.diff(name) for name in p.context.names]


@dataclass
class CommonZeroResult:
    """``no_common_zero`` is True only with a unit-ideal certificate."""

    no_common_zero: bool
    basis: GroebnerBasis
    polys: tuple

    @property
    def status(self) -> str:
        return "No" if self.no_common_zero else "Unknown"

    def unit_certificate(self) -> tuple | None:
        """Cofactors ``h`` with ``sum(h_i * polys_i) == 1`` when they were tracked."""
        if not self.no_common_zero or self.basis.cofactors is None:
            return None
        return self.basis.cofactors[0]

    def verify_certificate(self) -> bool:
        cof = self.unit_certificate()
        if cof is None:
            return False
        gens = self.basis.generators
        total = Polynomial.zero(self.basis.context)
        for h, g in zip(cof, gens):
            total = total + h * g
        return total == 1


def common_zero_exists(
    polys: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: Budget = groebner.DEFAULT_BUDGET,
    track_cofactors: bool = False,
) -> CommonZeroResult:
    polys = tuple(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    ideal = IdealPresentation.of(*polys)
    order = order or MonomialOrder.default(ideal.context)
    gb = groebner.buchberger(ideal, order, budget, track_cofactors)
    return CommonZeroResult(gb.is_unit(), gb, polys)


# -- rational roots of univariate polynomials ------------------------------------------------


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _horner(coeffs: list, r: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _deflate(coeffs: list, r: Fraction) -> list:
    # synthetic division by (t - r); coeffs low to high
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    acc = Fraction(0)
    for i in range(n, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    return out


def rational_roots(coeffs: Sequence) -> tuple:
    """Rational roots (with multiplicity) of ``sum(c_i t^i)`` and the unresolved cofactor degree."""
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    while len(c) > 1 and c[0] == 0:
        roots.append(Fraction(0))
        c = c[1:]
    if len(c) == 1:
        return roots, 0
    den = 1
    for v in c:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in c]
    cands = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        while len(c) > 1 and _horner(c, r) == 0:
            roots.append(r)
            c = _deflate(c, r)
    return roots, len(c) - 1


@dataclass
class RationalZeros:
    points: list
    complete_over_rationals: bool = True
    unresolved_degrees: list = field(default_factory=list)
    basis: GroebnerBasis | None = None


def _univariate_coeffs(p: Polynomial, i: int) -> list:
    deg = max(m[i] for m in p.terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for m, c in p.terms.items():
        coeffs[m[i]] += c
    return coeffs


def rational_common_zeros(
    polys: Sequence[Polynomial],
    budget: Budget = groebner.DEFAULT_BUDGET,
) -> RationalZeros:
    """All rational common zeros of a zero-dimensional system.

    Uses the lex basis with the first variable greatest and back-substitutes
    from the least variable up.
    """
    polys = tuple(polys)
    ideal = IdealPresentation.of(*polys)
    ctx = ideal.context
    order = MonomialOrder.default(ctx)
    gb = groebner.buchberger(ideal, order, budget)
    if gb.is_unit():
        return RationalZeros([], True, [], gb)
    n = ctx.arity
    lms = gb.leading_monomials()
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            raise NotZeroDimensional(
                f"no basis element has a pure power of {ctx.names[i]} as leading monomial"
            )
    scan = list(order.ranking)  # least variable first
    partial = [dict()]
    unresolved: list = []
    for step, i in enumerate(scan):
        known = set(scan[:step])
        relevant = [
            g for g in gb.elements
            if g.occurs(ctx.names[i]) and all(j in known or j == i or not g.occurs(ctx.names[j]) for j in range(n))
        ]
        nxt = []
        for sol in partial:
            univ = []
            for g in relevant:
                h = _fix(g, sol)
                if not h.is_zero():
                    univ.append(h)
            if not univ:
                raise NotZeroDimensional(f"{ctx.names[i]} is free over a partial solution")
            roots, rest = rational_roots(_univariate_coeffs(univ[0], i))
            if rest:
                unresolved.append(rest)
            for r in sorted(set(roots)):
                if all(_horner(_univariate_coeffs(h, i), r) == 0 for h in univ[1:]):
                    s = dict(sol)
                    s[i] = r
                    nxt.append(s)
        partial = nxt
    points = sorted(tuple(sol[i] for i in range(n)) for sol in partial)
    for pt in points:
        if not all(evaluate(p, pt) == 0 for p in polys):
            raise ArithmeticError(f"back-substituted point {pt} is not a common zero")
    return RationalZeros(points, True, unresolved, gb)


def _fix(p: Polynomial, values: dict) -> Polynomial:
    """Substitute rational values for the variables at the given indices."""
    out: dict = {}
    for m, c in p.terms.items():
        v = c
        m2 = list(m)
        for i, val in values.items():
            if m[i]:
                v *= val ** m[i]
                m2[i] = 0
        key = tuple(m2)
        out[key] = out.get(key, 0) + v
    return Polynomial(p.context, out)


def on_variety(point: Sequence, polys: Sequence[Polynomial]) -> tuple:
    """Exact value of each polynomial at ``point`` and whether all of them vanish."""
    values = [evaluate(p, point) for p in polys]
    return values, all(v == 0 for v in values)


def gradient_system(*polys: Polynomial) -> list:
    out = []
    for p in polys:
        out.extend(gradient(p))
    return out


@dataclass
class StatedClaim:
    """Comparison of a computed value against a value stated for a published example."""

    label: str
    stated: object
    computed: object

    @property
    def agrees(self) -> bool:
        return self.stated == self.computed

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "stated": _jsonable(self.stated),
            "computed": _jsonable(self.computed),
            "agrees": self.agrees,
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


SINGULAR_POINT = (Fraction(-1, 2), Fraction(-1), Fraction(-1, 4))
STATED_P2_GRADIENT_ZERO = (Fraction(-1, 2), Fraction(5, 4), Fraction(-1, 4))


@dataclass
class CurveAnalysis:
    k: int
    gradient_zeros_initial: RationalZeros
    initial_values: list
    unit_final: CommonZeroResult
    p2_gradient_zeros: RationalZeros
    q2_gradient_at_p2_zero: list
    claims: list

    @property
    def robust_claims_hold(self) -> bool:
        zeros = self.gradient_zeros_initial.points
        expected = SINGULAR_POINT + (Fraction(0),) * self.k
        return zeros == [expected] and self.initial_values[0] == 0 and self.unit_final.no_common_zero


def analyze_curves(k: int = 0, budget: Budget = groebner.DEFAULT_BUDGET, track_cofactors: bool = False) -> CurveAnalysis:
    """Gradient analysis for the codimension-two curve pair (``k`` extra t-variables)."""
    from .presentation import final_curves, initial_curves

    p1, q1 = initial_curves(k)
    p2, q2 = final_curves(k)
    zeros1 = rational_common_zeros(gradient_system(p1, q1), budget)
    pad = (Fraction(0),) * k
    point = SINGULAR_POINT + pad
    values, _ = on_variety(point, [p1, q1])
    unit = common_zero_exists(gradient_system(p2, q2), budget=budget, track_cofactors=track_cofactors)
    zeros_p2 = rational_common_zeros(_p2_gradient_xyz(p2), budget)
    q2_vals = []
    if zeros_p2.points:
        q2_vals = [evaluate(g, zeros_p2.points[0] + pad) for g in gradient(q2)]
    claims = [
        StatedClaim("gradient common zero of p1, q1", [list(point)], [list(p) for p in zeros1.points]),
        StatedClaim("p1 at the singular point", Fraction(0), values[0]),
        StatedClaim("q1 at the singular point", Fraction(0), values[1]),
        StatedClaim(
            "gradient zero of p2",
            [list(STATED_P2_GRADIENT_ZERO)],
            [list(p[:3]) for p in zeros_p2.points],
        ),
        StatedClaim("gradients of p2, q2 have no common zero", True, unit.no_common_zero),
    ]
    return CurveAnalysis(k, zeros1, values, unit, zeros_p2, q2_vals, claims)


def _p2_gradient_xyz(p2: Polynomial) -> list:
    # p2 does not involve the t-variables; its gradient zero is studied in (x, y, z)
    ctx3 = VarContext(("x", "y", "z"))
    return gradient(p2.to_context(ctx3))
