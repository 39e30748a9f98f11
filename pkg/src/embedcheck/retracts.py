"""Classification of plane retract curves ``x + y*f(x, y) = 0``."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .criteria import CriterionReport, OrderSearch, Verdict, check_cor_1_4
from .poly import Polynomial, VarContext, substitute


class MalformedMove(ValueError):
    pass


@dataclass(frozen=True)
class Translate:
    """``var -> var + shift``."""

    var: str
    shift: Fraction

    def images(self, ctx: VarContext) -> dict:
        return {self.var: Polynomial.var(ctx, self.var) + Fraction(self.shift)}

    def inverse(self) -> "Translate":
        return Translate(self.var, -Fraction(self.shift))


@dataclass(frozen=True)
class Triangular:
    """``var -> var + poly`` with ``poly`` free of ``var``."""

    var: str
    poly: Polynomial

    def images(self, ctx: VarContext) -> dict:
        if self.poly.context != ctx:
            raise MalformedMove("triangular image lives in another context")
        if self.poly.occurs(self.var):
            raise MalformedMove(f"triangular image for {self.var} must not mention {self.var}")
        return {self.var: Polynomial.var(ctx, self.var) + self.poly}

    def inverse(self) -> "Triangular":
        return Triangular(self.var, -self.poly)


@dataclass(frozen=True)
class Scale:
    """``var -> factor * var``."""

    var: str
    factor: Fraction

    def images(self, ctx: VarContext) -> dict:
        if not self.factor:
            raise MalformedMove("scaling by zero is not invertible")
        return {self.var: Polynomial.var(ctx, self.var) * Fraction(self.factor)}

    def inverse(self) -> "Scale":
        return Scale(self.var, 1 / Fraction(self.factor))


@dataclass(frozen=True)
class Swap:
    a: str
    b: str

    def images(self, ctx: VarContext) -> dict:
        if self.a == self.b:
            raise MalformedMove("swap needs two distinct variables")
        return {self.a: Polynomial.var(ctx, self.b), self.b: Polynomial.var(ctx, self.a)}

    def inverse(self) -> "Swap":
        return self


def apply_elementary_automorphism(p: Polynomial, move) -> Polynomial:
    for name in (getattr(move, "var", None), getattr(move, "a", None), getattr(move, "b", None)):
        if name is not None and name not in p.context:
            raise MalformedMove(f"move refers to unknown variable {name!r}")
    return substitute(p, move.images(p.context))


def apply_trail(p: Polynomial, trail) -> Polynomial:
    for move in trail:
        p = apply_elementary_automorphism(p, move)
    return p


class Outcome(str, enum.Enum):
    COORDINATE = "CoordinateUniqueEmbedding"
    XY_PLUS_C = "XYPlusC"
    INEQUIVALENT = "InequivalentEmbeddings"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class RetractClassification:
    outcome: Outcome
    curve: Polynomial
    constant: Fraction | None = None
    normal_form: Polynomial | None = None
    automorphism_trail: list = field(default_factory=list)
    report: CriterionReport | None = None
    notes: list = field(default_factory=list)

    def verify_trail(self) -> bool:
        if self.normal_form is None:
            return not self.automorphism_trail
        return apply_trail(self.curve, self.automorphism_trail) == self.normal_form


def _require_plane(ctx: VarContext) -> tuple:
    if ctx.arity != 2:
        raise ValueError(f"retract curves live in two variables, got {ctx.arity}")
    return ctx.names


def retract_curve(f: Polynomial) -> Polynomial:
    x, y = _require_plane(f.context)
    return Polynomial.var(f.context, x) + Polynomial.var(f.context, y) * f


def reduce_special_case(g: Polynomial) -> tuple:
    """Write ``(y-1)*g(y-1) = y*h(y) + c``; returns ``(h, c, trail)``.

    The trail ``[y -> y-1, x -> x - h(y)]`` takes ``x + xy + y*g(y)`` to ``xy + c``.
    """
    x, y = _require_plane(g.context)
    if g.occurs(x):
        raise ValueError(f"g must be a polynomial in {y} alone")
    Y = Polynomial.var(g.context, y)
    shifted = (Y - 1) * substitute(g, {y: Y - 1})
    c = shifted.constant_term()
    h = Polynomial(g.context, {(m[0], m[1] - 1): v for m, v in shifted.terms.items() if m[1] > 0})
    if Y * h + c != shifted:
        raise ArithmeticError("special-case division identity failed")
    trail = [Translate(y, Fraction(-1)), Triangular(x, -h)]
    return h, c, trail


def classify_retract_curve(f: Polynomial, orders: OrderSearch | None = None) -> RetractClassification:
    x, y = _require_plane(f.context)
    ctx = f.context
    curve = retract_curve(f)
    X = Polynomial.var(ctx, x)
    if not f.occurs(x):
        return RetractClassification(
            Outcome.COORDINATE, curve,
            notes=["degree of f in x is 0: the curve polynomial is a coordinate, so the embedding is unique"],
        )
    g = f - X
    if not g.occurs(x):
        h, c, trail = reduce_special_case(g)
        nf = X * Polynomial.var(ctx, y) + c
        result = RetractClassification(Outcome.XY_PLUS_C, curve, c, nf, trail)
        if not result.verify_trail():
            raise ArithmeticError("automorphism trail does not reach xy + c")
        if c:
            result.notes.append("xy + c with c != 0 has inequivalent embeddings")
        else:
            result.notes.append("c = 0: the curve xy = 0 has a unique embedding over the complex numbers")
        return result

    notes = []
    if f.degree(x) == 1:
        notes.append(
            "f has degree 1 in x but is not x + g(y); routed to the product-newton criterion"
        )
    report = check_cor_1_4(-f, Polynomial.var(ctx, y), orders or OrderSearch.all_permutations())
    outcome = Outcome.INEQUIVALENT if report.verdict is Verdict.NON_EXTENDABLE else Outcome.INCONCLUSIVE
    return RetractClassification(outcome, curve, report=report, notes=notes)
