import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embedcheck import MonomialOrder, Polynomial, VarContext, buchberger
from embedcheck.presentation import (
    AddDefinition,
    MoveError,
    MoveTrace,
    Presentation,
    add_definition,
    curve_context,
    eliminate_variable,
    final_curves,
    initial_curves,
    rename_variable,
    replay_example,
    replay_matches,
    rewrite_relation,
)

from conftest import XY, XYZ, P, polynomials

XYZU = XYZ.extend("u")
XZU = VarContext(("x", "z", "u"))


def start() -> Presentation:
    p1, q1 = initial_curves(0)
    return Presentation(XYZ, (p1, q1))


def gb(pres: Presentation, ctx: VarContext | None = None):
    ctx = ctx or pres.context
    rels = [r.to_context(ctx) for r in pres.relations]
    return buchberger(rels, MonomialOrder.default(ctx)).elements


def test_add_definition():
    pres = add_definition(start(), "u", P("x*y", XYZ))
    assert pres.context == XYZU
    assert pres.relations[2] == P("u - x*y", XYZU)
    assert pres.display()[2] == "u = x*y"
    pres = add_definition(start(), "v", Polynomial.zero(XYZ))
    assert pres.relations[2] == Polynomial.var(pres.context, "v")
    with pytest.raises(MoveError):
        add_definition(add_definition(start(), "u", P("x*y", XYZ)), "u", P("u", XYZU))


def test_rewrite_relation():
    pres = add_definition(start(), "u", P("x*y", XYZ))
    out = rewrite_relation(pres, 0, 2, -P("x", XYZU))
    assert out.relations[0] == P("x - x*u - y*z - z + 1/4", XYZU)
    assert rewrite_relation(pres, 0, 2, Polynomial.zero(XYZU)) == pres
    with pytest.raises(MoveError):
        rewrite_relation(pres, 1, 1, P("x", XYZU))
    with pytest.raises(MoveError):
        rewrite_relation(pres, 0, 5, P("x", XYZU))


def test_eliminate_variable_reproduces_third_presentation():
    pres = add_definition(start(), "u", P("x*y", XYZ))
    pres = rewrite_relation(pres, 0, 2, -P("x", XYZU))
    pres = rewrite_relation(pres, 1, 2, Polynomial.constant(XYZU, 2))
    assert pres.display()[1] == "y = -2*x + z^2 + 1/2*z - 2*u + 15/16"
    out = eliminate_variable(pres, "y", 1)
    assert out.context == XZU
    w = P("z^2 + 1/2*z - 2*u - 2*x + 15/16", XZU)
    expected = {
        P("u", XZU) - P("x", XZU) * w,
        P("x", XZU) - (P("x*u + z - 1/4", XZU) + w * P("z", XZU)),
    }
    assert out.canonical() == Presentation(XZU, tuple(expected)).canonical()


def test_eliminate_variable_edge_cases():
    pres = add_definition(start(), "v", Polynomial.zero(XYZ))
    assert eliminate_variable(pres, "v").relations == start().relations
    with pytest.raises(MoveError):
        eliminate_variable(start(), "x")


def test_rename():
    pres = add_definition(start(), "u", P("x*y", XYZ))
    assert rename_variable(rename_variable(pres, "u", "w"), "w", "u") == pres
    with pytest.raises(MoveError):
        rename_variable(pres, "x", "x")


def test_replay_first_example():
    trace = replay_example("ex31")
    assert replay_matches(trace, 0)
    assert trace.revalidate() is None
    assert len(trace.steps) == 5
    p2, q2 = final_curves(0)
    assert trace.final.canonical(XYZ) == Presentation(XYZ, (p2, q2)).canonical()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_replay_higher_dimensional_family(k):
    trace = replay_example("ex32", k)
    assert trace.final.context.arity == 3 + k
    assert replay_matches(trace, k)
    _, q2 = final_curves(k)
    assert q2.occurs("t1") and q2.degree("t1") == 2


def test_replay_rejects_k_zero():
    with pytest.raises(ValueError):
        replay_example("ex32", 0)
    with pytest.raises(ValueError):
        replay_example("ex99")


def test_trace_detects_tampered_snapshot():
    trace = MoveTrace(start())
    trace.apply(AddDefinition("u", P("x*y", XYZ)))
    trace.snapshots[0] = add_definition(start(), "u", P("x*y + 1", XYZ))
    assert trace.revalidate() == 0


def test_curve_context():
    assert curve_context(2).names == ("x", "y", "z", "t1", "t2")


# -- properties --------------------------------------------------------------------------

pair_rels = st.lists(polynomials(XY, max_terms=3, max_exp=2), min_size=2, max_size=2).filter(
    lambda rs: all(not r.is_zero() for r in rs)
)


@settings(max_examples=30)
@given(pair_rels, polynomials(XY, max_terms=2, max_exp=2))
def test_rewrite_preserves_the_ideal(rels, mult):
    pres = Presentation(XY, tuple(rels))
    try:
        out = rewrite_relation(pres, 0, 1, mult)
    except MoveError:  # the rewrite cancelled the relation entirely
        return
    assert gb(out) == gb(pres)


@settings(max_examples=30)
@given(pair_rels, polynomials(XY, max_terms=3, max_exp=2))
def test_add_then_eliminate_preserves_the_ideal(rels, rhs):
    pres = Presentation(XY, tuple(rels))
    back = eliminate_variable(add_definition(pres, "u", rhs), "u")
    assert gb(back) == gb(pres)
