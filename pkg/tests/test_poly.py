from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from embedcheck import Polynomial, VarContext
from embedcheck.poly import ContextMismatch, evaluate, substitute, try_divide

from conftest import XY, XYZ, P, from_sympy, polynomials, to_sympy

P1 = "x - x^2*y - y*z - z + 1/4"
small = st.fractions(-5, 5, max_denominator=4)


def test_context_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        VarContext(("x", "x"))
    with pytest.raises(ValueError):
        VarContext(())
    assert XYZ.index("z") == 2
    with pytest.raises(KeyError):
        XYZ.index("w")


def test_canonical_storage():
    p = Polynomial(XY, [((1, 0), 2), ((0, 1), 0), ((1, 0), -2)])
    assert p.is_zero() and p.terms == {}
    q = Polynomial(XY, [((1, 1), Fraction(2, 4))])
    assert q.coefficient((1, 1)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        Polynomial(XY, {(1,): 1})


def test_addition_examples():
    assert P("x + y") + P("-y") == P("x")
    p = P("x^2 - 3*y + 1/5")
    assert p + Polynomial.zero(XY) == p
    assert P("x - x^2*y") + P("x^2*y") == P("x")


def test_multiplication_examples():
    assert P("x - x^2*y") * P("x + x^2*y") == P("x^2 - x^4*y^2")
    p = P("x^3*y - 2")
    assert p * 1 == p
    assert (p * 0).is_zero()


def test_mixed_contexts_are_rejected():
    with pytest.raises(ContextMismatch):
        P("x") + P("x", XYZ)


def test_substitute_examples():
    X = Polynomial.var(XY, "x")
    Y = Polynomial.var(XY, "y")
    assert substitute(P("x - x^2*y^2"), {"x": X ** 2}) == P("x^2 - x^4*y^2")
    p = P("x - 7*y^3")
    assert substitute(p, {}) == p
    assert substitute(P("x + x*y + y*y"), {"y": Y - 1}) == X * Y + (Y - 1) ** 2


def test_diff_examples():
    p1 = P(P1, XYZ)
    assert p1.diff("x") == P("1 - 2*x*y", XYZ)
    assert p1.diff("z") == P("-y - 1", XYZ)
    assert Polynomial.constant(XYZ, 7).diff("y").is_zero()


def test_evaluate_examples():
    point = (Fraction(-1, 2), Fraction(-1), Fraction(-1, 4))
    assert evaluate(P(P1, XYZ), point) == 0
    assert evaluate(Polynomial.zero(XYZ), point) == 0
    assert evaluate(P("1 - 2*x*y", XYZ), point) == 0
    with pytest.raises(ValueError):
        evaluate(P("x"), (1, 2, 3))


def test_try_divide_examples():
    assert try_divide(P("x^2 - x^4*y^2"), P("x - x^2*y")) == P("x + x^2*y")
    p = P("3*x*y - 1/2")
    assert try_divide(p, Polynomial.one(XY)) == p
    assert try_divide(P("x^2 + 1"), P("x")) is None
    with pytest.raises(ZeroDivisionError):
        try_divide(p, Polynomial.zero(XY))


def test_power_matches_repeated_product():
    p = P("x - 2*y + 1/3")
    acc = Polynomial.one(XY)
    for k in range(7):
        assert p ** k == acc
        acc = acc * p


def test_to_context_by_name():
    p = P("x*y^2 + 3", XY)
    wide = p.to_context(VarContext(("y", "w", "x")))
    assert wide.terms == {(2, 0, 1): 1, (0, 0, 0): 3}
    with pytest.raises(ContextMismatch):
        p.to_context(VarContext(("x",)))


# -- properties -------------------------------------------------------------------------

@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(XY)


@given(polynomials(), polynomials())
def test_arithmetic_agrees_with_sympy(p, q):
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q), XY)
    assert p - q == from_sympy(to_sympy(p) - to_sympy(q), XY)


@given(polynomials(), polynomials(), polynomials(max_terms=2), polynomials(max_terms=2))
def test_substitute_is_a_ring_homomorphism(p, q, a, b):
    images = {"x": a, "y": b}
    assert substitute(p * q, images) == substitute(p, images) * substitute(q, images)
    assert substitute(p + q, images) == substitute(p, images) + substitute(q, images)


@given(polynomials(), polynomials(max_terms=2), polynomials(max_terms=2))
def test_substitute_agrees_with_sympy(p, a, b):
    x, y = sympy.symbols("x y")
    expected = to_sympy(p).subs({x: to_sympy(a), y: to_sympy(b)}, simultaneous=True)
    assert substitute(p, {"x": a, "y": b}) == from_sympy(expected, XY)


@given(polynomials(), polynomials(), st.sampled_from(["x", "y"]))
def test_leibniz_rule(p, q, v):
    assert (p * q).diff(v) == p.diff(v) * q + p * q.diff(v)


@given(polynomials(), polynomials())
def test_try_divide_recovers_factor(p, d):
    if d.is_zero():
        return
    assert try_divide(p * d, d) == p


@given(polynomials(), polynomials(), st.tuples(small, small))
def test_evaluate_commutes_with_ring_operations(p, q, point):
    assert evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point)
    assert evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point)


@given(polynomials())
def test_hash_respects_equality(p):
    q = Polynomial(XY, dict(reversed(list(p.terms.items()))))
    assert p == q and hash(p) == hash(q)
