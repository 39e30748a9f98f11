from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from embedcheck import MonomialOrder, Polynomial, VarContext, parse_polynomial

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"
GOLDEN = Path(__file__).resolve().parent / "golden"

XY = VarContext(("x", "y"))
XYZ = VarContext(("x", "y", "z"))


def P(text: str, ctx: VarContext = XY) -> Polynomial:
    return parse_polynomial(text, ctx)


def lex(ctx: VarContext, literal: str | None = None) -> MonomialOrder:
    return MonomialOrder.parse(ctx, literal) if literal else MonomialOrder.default(ctx)


def to_sympy(p: Polynomial):
    """Independent oracle representation of ``p``."""
    syms = sympy.symbols(p.context.names)
    out = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            term *= s ** e
        out += term
    return sympy.expand(out)


def from_sympy(expr, ctx: VarContext) -> Polynomial:
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(ctx.names))
    return Polynomial(ctx, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


# -- hypothesis strategies ------------------------------------------------------------

coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polynomials(draw, ctx: VarContext = XY, max_terms: int = 4, max_exp: int = 3):
    n = ctx.arity
    monos = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), max_size=max_terms))
    terms = {m: draw(coefficients) for m in monos}
    return Polynomial(ctx, terms)


@st.composite
def monomials(draw, n: int = 3, max_exp: int = 4):
    return tuple(draw(st.integers(0, max_exp)) for _ in range(n))


@pytest.fixture
def xy() -> VarContext:
    return XY


@pytest.fixture
def xyz() -> VarContext:
    return XYZ


# -- brute-force convex-hull oracle -----------------------------------------------------


def _solve_exact(cols: list, rhs: list):
    """Unique solution of ``[cols] * lam = rhs`` when the columns are independent and the system is consistent.

    Integer Gauss-Jordan by cross-multiplication, so no fractions until the end.
    """
    rows = len(rhs)
    k = len(cols)
    M = [[cols[j][i] for j in range(k)] + [rhs[i]] for i in range(rows)]
    for r in range(k):
        piv = next((i for i in range(r, rows) if M[i][r] != 0), None)
        if piv is None:
            return None  # dependent columns
        M[r], M[piv] = M[piv], M[r]
        p = M[r][r]
        for i in range(rows):
            if i != r and M[i][r] != 0:
                f = M[i][r]
                M[i] = [a * p - f * b for a, b in zip(M[i], M[r])]
    if any(M[i][k] != 0 for i in range(k, rows)):
        return None  # inconsistent
    return [Fraction(M[i][k], M[i][i]) for i in range(k)]


def brute_force_is_vertex(v: tuple, others: list) -> bool:
    """``v`` is a vertex iff no basic feasible solution writes it as a convex combination of ``others``.

    Enumerates every column subset of size at most ``dim + 1`` (Caratheodory).
    """
    if not others:
        return True
    rhs = list(v) + [1]
    cols = [list(s) + [1] for s in others]
    for size in range(1, min(len(cols), len(rhs)) + 1):
        for subset in combinations(range(len(cols)), size):
            lam = _solve_exact([cols[j] for j in subset], rhs)
            if lam is not None and all(x >= 0 for x in lam):
                return False
    return True


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite golden files from current output")


@pytest.fixture
def update_golden(request) -> bool:
    return request.config.getoption("--update-golden")
