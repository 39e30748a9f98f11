import random
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embedcheck import IdealPresentation, MonomialOrder, Polynomial
from embedcheck.criteria import (
    HypothesisError,
    OrderSearch,
    Verdict,
    build_power_pair,
    build_product_pair,
    check_cor_1_2,
    check_cor_1_4,
    check_thm_1_1,
    check_thm_1_3,
    rescaled,
    reverify,
    verify_hom_surjective,
)
from embedcheck.newton import hadas_coordinate_test
from embedcheck.order import all_orders, compare, leading_monomial
from embedcheck.poly import try_divide

from conftest import XY, XYZ, P, polynomials

YX = MonomialOrder.parse(XY, "y<x")


def test_power_pair_construction():
    pair = build_power_pair(P("x*y"), 2)
    assert pair.source.generators == (P("x - x^2*y^2"),)
    assert pair.target.generators == (P("x - x^2*y"),)
    assert pair.map(P("x")) == P("x^2")
    assert pair.map(P("y")) == P("y")
    with pytest.raises(HypothesisError, match="occur"):
        build_power_pair(P("y"), 2)
    with pytest.raises(HypothesisError, match="k >= 2"):
        build_power_pair(P("x*y"), 1)


def test_product_pair_construction():
    pair = build_product_pair(P("-x^2"), P("y"))
    assert pair.source.generators == (P("x + x^2*y"),)
    # f1(xy, y) = -(xy)^2, so the target is x + x^2*y^2
    assert pair.target.generators == (P("x + x^2*y^2"),)
    assert pair.map(P("x")) == P("x*y")
    with pytest.raises(HypothesisError, match="constant"):
        build_product_pair(P("-x^2"), P("5"))
    with pytest.raises(HypothesisError, match="occur"):
        build_product_pair(P("y^3"), P("y"))
    with pytest.raises(HypothesisError):
        build_product_pair(P("x"), P("x*y"))


def test_extras_must_avoid_x1():
    with pytest.raises(HypothesisError):
        build_power_pair(P("x*y", XYZ), 2, [P("x*z", XYZ)])


def test_homomorphism_certificates():
    rep = verify_hom_surjective(build_power_pair(P("x*y"), 2))
    assert rep.divisibility_witness == P("x + x^2*y")
    assert rep.surjectivity_residue.is_zero()
    f2 = P("y^2 + 3")
    rep = verify_hom_surjective(build_product_pair(P("x^2 - y"), f2))
    assert rep.divisibility_witness == f2
    assert rep.surjectivity_residue.is_zero()


def test_thm_1_1_power_pair():
    pair = build_power_pair(P("x*y"), 2)
    rep = check_thm_1_1(pair, OrderSearch(YX))
    assert rep.verdict is Verdict.NON_EXTENDABLE
    assert rep.gb_elements == [P("x^2*y - x")]
    assert rep.gb_leading_monomials == [(2, 1)]
    assert reverify(rep, pair)


def test_thm_1_1_missing_variable_probe():
    pair = build_power_pair(P("x*y"), 2)
    probe = replace(pair, target=IdealPresentation.of(P("x - y^2")))
    rep = check_thm_1_1(probe, OrderSearch(YX))
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "positivity"


def test_thm_1_1_three_variables_with_extra():
    pair = build_power_pair(P("x*y", XYZ), 2, [P("z", XYZ)])
    assert set(pair.target.generators) == {P("x - x^2*y", XYZ), P("z", XYZ)}
    rep = check_thm_1_1(pair)
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "positivity"
    assert len(rep.notes) == 6


@pytest.mark.parametrize(
    "f, k, verdict, witness",
    [
        ("x*y", 2, Verdict.NON_EXTENDABLE, (1, 1)),
        ("x + y", 2, Verdict.CONDITION_NOT_MET, None),
        ("x*y + x", 3, Verdict.NON_EXTENDABLE, (1, 1)),
    ],
)
def test_cor_1_2(f, k, verdict, witness):
    rep = check_cor_1_2(P(f), k)
    assert rep.verdict is verdict
    assert rep.hadas_witness == witness
    if verdict is Verdict.NON_EXTENDABLE:
        assert reverify(rep, build_power_pair(P(f), k))
    else:
        assert rep.failed_clause == "vertex"


def test_thm_1_3_examples():
    pair = build_product_pair(P("-x^2"), P("y"))
    rep = check_thm_1_3(pair, OrderSearch(YX))
    assert rep.verdict is Verdict.NON_EXTENDABLE
    assert rep.gb_leading_monomials == [(2, 2)]
    assert compare((2, 2), (1, 1), YX) == 1
    assert reverify(rep, pair)

    # leading monomial xy collides with x1*f2 = xy under every order
    rep = check_thm_1_3(build_product_pair(P("-x"), P("y")))
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "height"
    assert rep.colliding_monomial == (1, 1)


def test_thm_1_3_positivity_failure():
    pair = build_product_pair(P("-x^2", XYZ), P("y", XYZ), [P("y*z", XYZ)])
    rep = check_thm_1_3(pair)
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "positivity"


def test_cor_1_4_examples():
    rep = check_cor_1_4(P("-x^2"), P("y"))
    assert rep.verdict is Verdict.NON_EXTENDABLE
    assert rep.hadas_witness == (2, 2)
    assert rep.gb_elements == [P("x + x^2*y^2")]
    assert reverify(rep, build_product_pair(P("-x^2"), P("y")))

    rep = check_cor_1_4(P("-x"), P("y"))
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "height"
    assert rep.colliding_monomial == (1, 1)
    assert hadas_coordinate_test(P("x + x*y")).witness == (1, 1)

    with pytest.raises(HypothesisError):
        check_cor_1_4(P("y^2"), P("y"))


def test_reverify_rejects_tampered_reports():
    pair = build_power_pair(P("x*y"), 2)
    rep = check_thm_1_1(pair)
    bad = replace(rep, divisibility_witness=P("x"))
    assert not reverify(bad, pair)
    bad = replace(rep, gb_elements=[P("x^2*y")])
    assert not reverify(bad, pair)
    rep = check_cor_1_2(P("x*y + x"), 3)
    bad = replace(rep, hadas_witness=(1, 0))
    assert not reverify(bad, build_power_pair(P("x*y + x"), 3))


def test_power_newton_does_not_imply_power_groebner():
    # (2,2) is a strictly positive vertex of f, yet in x - f(x^2, y) the
    # monomial x^4*y^2 is never lex-largest: x^6 or y^3 always wins
    f = P("x^3 + y^3 + x^2*y^2")
    assert check_cor_1_2(f, 2).verdict is Verdict.NON_EXTENDABLE
    rep = check_thm_1_1(build_power_pair(f, 2))
    assert rep.verdict is Verdict.CONDITION_NOT_MET
    assert rep.failed_clause == "positivity"


# -- randomized properties ------------------------------------------------------------------


def random_f(rng: random.Random):
    while True:
        ctx = rng.choice([XY, XYZ])
        terms = {}
        for _ in range(rng.randint(1, 4)):
            terms[tuple(rng.randint(0, 3) for _ in range(ctx.arity))] = rng.choice([-3, -1, 1, 2, 5])
        f = Polynomial(ctx, terms)
        if f.occurs("x"):
            return f, rng.choice([2, 3])


def test_power_groebner_agrees_with_power_newton_under_its_hypothesis():
    # when some order makes the single target generator's leading monomial
    # all-positive, both checkers must report NonExtendable
    rng = random.Random(11)
    checked = 0
    while checked < 12:
        f, k = random_f(rng)
        if check_cor_1_2(f, k).verdict is not Verdict.NON_EXTENDABLE:
            continue
        pair = build_power_pair(f, k)
        t = pair.target_generator()
        if not any(all(e > 0 for e in leading_monomial(t, o)[0]) for o in all_orders(t.context)):
            continue
        rep = check_thm_1_1(pair)
        assert rep.verdict is Verdict.NON_EXTENDABLE
        assert reverify(rep, pair)
        checked += 1


@settings(max_examples=40)
@given(polynomials(XY, max_terms=3), st.integers(2, 3))
def test_power_pair_divisibility_always_holds(f, k):
    if not f.occurs("x"):
        return
    pair = build_power_pair(f, k)
    assert try_divide(pair.map(pair.source_generator()), pair.target_generator()) is not None


@settings(max_examples=30)
@given(polynomials(XY, max_terms=3), st.integers(2, 3), st.fractions(-5, 5, max_denominator=3))
def test_verdicts_invariant_under_rescaling(f, k, c):
    if not f.occurs("x") or c == 0:
        return
    pair = build_power_pair(f, k)
    base = check_thm_1_1(pair)
    rep = check_thm_1_1(rescaled(pair, [c]))
    assert rep.verdict is base.verdict
    if base.non_extendable:
        assert reverify(base, pair)


def test_verdicts_invariant_under_permuting_extras():
    f = P("x*y*z + x", XYZ)
    extras = [P("y^2 - z", XYZ), P("y*z - 1", XYZ)]
    a = check_thm_1_1(build_power_pair(f, 2, extras))
    b = check_thm_1_1(build_power_pair(f, 2, extras[::-1]))
    assert a.verdict is b.verdict
    assert a.order_used == b.order_used
    assert a.gb_elements == b.gb_elements


def test_nonextendable_reports_reverify_on_random_product_pairs():
    rng = random.Random(3)
    seen = 0
    for _ in range(30):
        f1, _ = random_f(rng)
        ctx = f1.context
        f2 = Polynomial(ctx, {tuple([0] + [rng.randint(0, 2) for _ in range(ctx.arity - 1)]): 1})
        if f2.is_constant():
            continue
        pair = build_product_pair(f1, f2)
        for rep in (check_cor_1_4(f1, f2), check_thm_1_3(pair)):
            if rep.non_extendable:
                assert reverify(rep, pair)
                seen += 1
    assert seen > 0
