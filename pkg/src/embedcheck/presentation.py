"""Algebras given by generators and relations, and isomorphism-preserving moves on them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .order import MonomialOrder, leading_monomial
from .poly import Polynomial, VarContext, substitute
from .textio import parse_polynomial


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """``<names | r_1 = 0, ..., r_m = 0>``."""

    context: VarContext
    relations: tuple

    def __post_init__(self):
        rels = tuple(self.relations)
        for r in rels:
            if r.context != self.context:
                raise MoveError("relations must share the presentation's context")
            if r.is_zero():
                raise MoveError("zero relations are not allowed")
        object.__setattr__(self, "relations", rels)

    def defining_relation(self, var: str) -> int | None:
        """Index of a relation of the exact form ``var - g`` with ``g`` free of ``var``."""
        V = Polynomial.var(self.context, var)
        for i, r in enumerate(self.relations):
            g = V - r
            if not g.occurs(var):
                return i
        return None

    def canonical(self, context: VarContext | None = None) -> frozenset:
        """Relations up to sign and order, re-expressed by name in ``context``."""
        ctx = context or self.context
        order = MonomialOrder.default(ctx)
        out = set()
        for r in self.relations:
            r = r.to_context(ctx)
            if leading_monomial(r, order)[1] < 0:
                r = -r
            out.add(r)
        return frozenset(out)

    def display(self) -> list:
        """Relations as ``v = rhs`` where a relation has the form ``v - rhs``, else ``r = 0``."""
        lines = []
        for r in self.relations:
            for name in self.context.names:
                V = Polynomial.var(self.context, name)
                if not (V - r).occurs(name):
                    lines.append(f"{name} = {V - r}")
                    break
            else:
                lines.append(f"{r} = 0")
        return lines


@dataclass(frozen=True)
class AddDefinition:
    newvar: str
    rhs: Polynomial

    def apply(self, pres: Presentation) -> Presentation:
        return add_definition(pres, self.newvar, self.rhs)


@dataclass(frozen=True)
class RewriteRelation:
    i: int
    j: int
    multiplier: Polynomial

    def apply(self, pres: Presentation) -> Presentation:
        return rewrite_relation(pres, self.i, self.j, self.multiplier)


@dataclass(frozen=True)
class EliminateVariable:
    var: str
    using: int | None = None

    def apply(self, pres: Presentation) -> Presentation:
        return eliminate_variable(pres, self.var, self.using)


@dataclass(frozen=True)
class RenameVariable:
    old: str
    new: str

    def apply(self, pres: Presentation) -> Presentation:
        return rename_variable(pres, self.old, self.new)


def add_definition(pres: Presentation, newvar: str, rhs: Polynomial) -> Presentation:
    if newvar in pres.context:
        raise MoveError(f"{newvar!r} is already a generator")
    if rhs.context != pres.context:
        raise MoveError("the definition must be a polynomial in the existing generators")
    ctx = pres.context.extend(newvar)
    rels = tuple(r.to_context(ctx) for r in pres.relations)
    return Presentation(ctx, rels + (Polynomial.var(ctx, newvar) - rhs.to_context(ctx),))


def rewrite_relation(pres: Presentation, i: int, j: int, multiplier: Polynomial) -> Presentation:
    """``r_i <- r_i + multiplier * r_j``."""
    n = len(pres.relations)
    if not (0 <= i < n and 0 <= j < n):
        raise MoveError(f"relation index out of range (have {n} relations)")
    if i == j:
        raise MoveError("a relation cannot be rewritten by itself")
    rels = list(pres.relations)
    rels[i] = rels[i] + multiplier * rels[j]
    return Presentation(pres.context, tuple(rels))


def eliminate_variable(pres: Presentation, var: str, using: int | None = None) -> Presentation:
    """Drop a generator defined by a relation ``var - g`` and substitute ``g`` elsewhere."""
    if var not in pres.context:
        raise MoveError(f"unknown generator {var!r}")
    if using is None:
        using = pres.defining_relation(var)
        if using is None:
            raise MoveError(f"no relation of the form {var} - g(other generators)")
    V = Polynomial.var(pres.context, var)
    g = V - pres.relations[using]
    if g.occurs(var):
        raise MoveError(f"relation {using} is not of the form {var} - g with g free of {var}")
    names = tuple(n for n in pres.context.names if n != var)
    if not names:
        raise MoveError("cannot eliminate the last generator")
    ctx = VarContext(names)
    g_new = g.to_context(ctx)
    rels = []
    for k, r in enumerate(pres.relations):
        if k == using:
            continue
        r2 = substitute(r, {var: g_new})
        if r2.is_zero():
            raise MoveError(f"relation {k} becomes trivial after eliminating {var}")
        rels.append(r2)
    return Presentation(ctx, tuple(rels))


def rename_variable(pres: Presentation, old: str, new: str) -> Presentation:
    if old not in pres.context:
        raise MoveError(f"unknown generator {old!r}")
    if new in pres.context:
        raise MoveError(f"{new!r} is not a fresh name")
    ctx = VarContext(tuple(new if n == old else n for n in pres.context.names))
    rels = tuple(Polynomial._raw(ctx, r.terms) for r in pres.relations)
    return Presentation(ctx, rels)


@dataclass
class MoveTrace:
    initial: Presentation
    steps: list = field(default_factory=list)
    snapshots: list = field(default_factory=list)

    def apply(self, step) -> Presentation:
        current = self.snapshots[-1] if self.snapshots else self.initial
        nxt = step.apply(current)
        self.steps.append(step)
        self.snapshots.append(nxt)
        return nxt

    @property
    def final(self) -> Presentation:
        return self.snapshots[-1] if self.snapshots else self.initial

    def revalidate(self) -> int | None:
        """Index of the first snapshot that the recorded steps fail to reproduce, else None."""
        current = self.initial
        for idx, (step, snap) in enumerate(zip(self.steps, self.snapshots)):
            current = step.apply(current)
            if current != snap:
                return idx
        return None


# -- the codimension-two curve scripts ---------------------------------------------------

P1_TEXT = "x - x^2*y - y*z - z + 1/4"
Q1_TEXT = "y - z^2 - 1/2*z + 2*x*y + 2*x - 15/16"
P2_TEXT = "y - x*z^2 - 1/2*x*z + 2*x*y + 2*x^2 - 15/16*x"
Q2_TEXT = "x - x*y - z + 1/4 - (z^2 + 1/2*z - 2*y - 2*x + 15/16)*z"


def curve_context(k: int = 0) -> VarContext:
    return VarContext(("x", "y", "z") + tuple(f"t{i}" for i in range(1, k + 1)))


def _t_squares(ctx: VarContext, k: int) -> Polynomial:
    total = Polynomial.zero(ctx)
    for i in range(1, k + 1):
        total = total + Polynomial.var(ctx, f"t{i}") ** 2
    return total


def initial_curves(k: int = 0) -> tuple:
    """``(p1, q1)``; for ``k >= 1`` the t-squares are added to ``p1``."""
    ctx = curve_context(k)
    p1 = parse_polynomial(P1_TEXT, ctx) + _t_squares(ctx, k)
    q1 = parse_polynomial(Q1_TEXT, ctx)
    return p1, q1


def final_curves(k: int = 0) -> tuple:
    """``(p2, q2)``; for ``k >= 1`` the t-squares are attached to ``q2``."""
    ctx = curve_context(k)
    p2 = parse_polynomial(P2_TEXT, ctx)
    q2 = parse_polynomial(Q2_TEXT, ctx) + _t_squares(ctx, k)
    return p2, q2


def _script(ctx: VarContext) -> list:
    # the moves as data; built in the context each step expects
    x, y = Polynomial.var(ctx, "x"), Polynomial.var(ctx, "y")
    wide = ctx.extend("u")
    X = Polynomial.var(wide, "x")
    return [
        AddDefinition("u", x * y),                      # u = xy
        RewriteRelation(0, 2, -X),                      # x = xu + yz + z - 1/4
        RewriteRelation(1, 2, Polynomial.constant(wide, 2)),  # y = z^2 + z/2 - 2u - 2x + 15/16
        EliminateVariable("y", 1),
        RenameVariable("u", "y"),
    ]


def replay_example(which: str = "ex31", k: int = 1) -> MoveTrace:
    """Run the elementary-isomorphism chain from ``(p1, q1)`` towards ``(p2, q2)``."""
    if which == "ex31":
        k = 0
    elif which == "ex32":
        if k < 1:
            raise ValueError("the higher-dimensional family needs k >= 1")
    else:
        raise ValueError(f"unknown example {which!r}; expected 'ex31' or 'ex32'")
    p1, q1 = initial_curves(k)
    trace = MoveTrace(Presentation(p1.context, (p1, q1)))
    for step in _script(p1.context):
        trace.apply(step)
    return trace


def replay_matches(trace: MoveTrace, k: int) -> bool:
    ctx = curve_context(k)
    p2, q2 = final_curves(k)
    expected = Presentation(ctx, (p2, q2)).canonical(ctx)
    return trace.final.canonical(ctx) == expected
