"""Command line interface.

Exit codes: 0 command ran and the verdict is the affirmative one, 1 negative
or inconclusive verdict, 2 input error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import report as rep
from .criteria import (
    HypothesisError,
    OrderSearch,
    Verdict,
    build_power_pair,
    build_product_pair,
    check_cor_1_2,
    check_cor_1_4,
    check_thm_1_1,
    check_thm_1_3,
)
from .groebner import Budget, BudgetExceeded, buchberger, division
from .newton import hadas_coordinate_test, newton_polytope, support_points
from .order import MonomialOrder
from .presentation import MoveError, replay_example, replay_matches
from .retracts import Outcome, Translate, Triangular, classify_retract_curve
from .singular import (
    NotZeroDimensional,
    analyze_curves,
    common_zero_exists,
    gradient_system,
    on_variety,
    rational_common_zeros,
)
from .textio import ParseError, parse_problem

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

COMMANDS = (
    "gb", "nf", "newton", "hadas", "pair-power", "pair-product", "check-t11",
    "check-c12", "check-t13", "check-c14", "retract", "singular", "replay",
)


class InputError(ValueError):
    pass


def _load(opts):
    if not opts.input:
        raise InputError(f"{opts.command} needs a problem file (--in PATH)")
    try:
        text = Path(opts.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {opts.input}: {exc.strerror}") from None
    return parse_problem(text)


def _order(opts, prob) -> MonomialOrder:
    if opts.order:
        return MonomialOrder.parse(prob.context, opts.order)
    return prob.order or MonomialOrder.default(prob.context)


def _search(opts, prob) -> OrderSearch:
    if opts.all_orders:
        return OrderSearch.all_permutations()
    if opts.order:
        return OrderSearch(MonomialOrder.parse(prob.context, opts.order))
    if prob.order is not None:
        return OrderSearch(prob.order)
    return OrderSearch.all_permutations()


def _inputs(prob) -> dict:
    out = {"vars": list(prob.context.names)}
    for name, p in prob.polys.items():
        out[name] = rep.poly_text(p)
    return out


def _verdict_exit(verdict: Verdict, budget_hit: bool) -> int:
    if verdict is Verdict.NON_EXTENDABLE:
        return EXIT_OK
    if budget_hit:
        return EXIT_BUDGET
    return EXIT_NEGATIVE


# -- commands ---------------------------------------------------------------------------


def cmd_gb(opts, r: rep.Report, budget: Budget) -> None:
    prob = _load(opts)
    order = _order(opts, prob)
    gens = prob.poly_list("gens")
    gb = buchberger(gens, order, budget)
    r.inputs = _inputs(prob)
    r.verdict = "UnitIdeal" if gb.is_unit() else "Basis"
    r.certificates = {
        "order": order.literal(),
        "basis": [rep.poly_text(g, order) for g in gb.elements],
        "leading_monomials": [rep.monomial(m, prob.context) for m in gb.leading_monomials()],
        "stats": gb.stats,
    }


def cmd_nf(opts, r, budget) -> None:
    prob = _load(opts)
    order = _order(opts, prob)
    f = prob.poly("f")
    gens = prob.poly_list("gens", default_all=False) or [
        p for n, p in prob.polys.items() if p is not f
    ]
    gb = buchberger(gens, order, budget)
    quots, rem = division(f, list(gb.elements), order)
    r.inputs = _inputs(prob)
    r.verdict = "Member" if rem.is_zero() else "NotMember"
    r.certificates = {
        "order": order.literal(),
        "basis": [rep.poly_text(g, order) for g in gb.elements],
        "quotients": [rep.poly_text(qq, order) for qq in quots],
        "normal_form": rep.poly_text(rem, order),
    }


def cmd_newton(opts, r, budget) -> None:
    prob = _load(opts)
    f = prob.poly("f")
    r.inputs = _inputs(prob)
    poly = newton_polytope(support_points(f))
    r.verdict = "Computed"
    r.certificates = rep.polytope(poly)


def cmd_hadas(opts, r, budget) -> int:
    prob = _load(opts)
    f = prob.poly("f")
    r.inputs = _inputs(prob)
    h = hadas_coordinate_test(f)
    r.verdict = "Passes" if h.passes else "FailsAt"
    r.certificates = {
        "witness": list(h.witness) if h.witness else None,
        "separating": rep.functional(h.certificate),
        "polytope": rep.polytope(h.polytope),
    }
    if h.passes:
        r.notes.append("passing is necessary, not sufficient, for being a coordinate polynomial")
    return EXIT_OK if h.passes else EXIT_NEGATIVE


def _extras(prob) -> list:
    return prob.poly_list("extra", default_all=False)


def cmd_pair_power(opts, r, budget) -> None:
    prob = _load(opts)
    p = build_power_pair(prob.poly("f"), prob.param_int("k"), _extras(prob))
    r.inputs = _inputs(prob)
    r.verdict = "Built"
    r.certificates = {"pair": rep.pair(p)}


def cmd_pair_product(opts, r, budget) -> None:
    prob = _load(opts)
    p = build_product_pair(prob.poly("f1"), prob.poly("f2"), _extras(prob))
    r.inputs = _inputs(prob)
    r.verdict = "Built"
    r.certificates = {"pair": rep.pair(p)}


def _criterion_result(r, pair, result) -> int:
    r.verdict = result.verdict.value
    r.certificates = {"pair": rep.pair(pair), "criterion": rep.criterion(result, pair.context)}
    r.notes.extend(result.notes)
    if result.budget_exceeded:
        r.limits["exceeded"] = True
    return _verdict_exit(result.verdict, result.budget_exceeded)


def cmd_check_t11(opts, r, budget) -> int:
    prob = _load(opts)
    r.inputs = _inputs(prob)
    pair = build_power_pair(prob.poly("f"), prob.param_int("k"), _extras(prob))
    return _criterion_result(r, pair, check_thm_1_1(pair, _search(opts, prob), budget))


def cmd_check_c12(opts, r, budget) -> int:
    prob = _load(opts)
    r.inputs = _inputs(prob)
    f, k = prob.poly("f"), prob.param_int("k")
    pair = build_power_pair(f, k)
    return _criterion_result(r, pair, check_cor_1_2(f, k, budget))


def cmd_check_t13(opts, r, budget) -> int:
    prob = _load(opts)
    r.inputs = _inputs(prob)
    pair = build_product_pair(prob.poly("f1"), prob.poly("f2"), _extras(prob))
    return _criterion_result(r, pair, check_thm_1_3(pair, _search(opts, prob), budget))


def cmd_check_c14(opts, r, budget) -> int:
    prob = _load(opts)
    r.inputs = _inputs(prob)
    f1, f2 = prob.poly("f1"), prob.poly("f2")
    pair = build_product_pair(f1, f2)
    return _criterion_result(r, pair, check_cor_1_4(f1, f2, _search(opts, prob), budget))


def _move(m) -> dict:
    if isinstance(m, Translate):
        return {"move": "Translate", "var": m.var, "shift": rep.q(m.shift)}
    if isinstance(m, Triangular):
        return {"move": "Triangular", "var": m.var, "poly": rep.poly_text(m.poly)}
    return {"move": type(m).__name__, **{k: str(v) for k, v in vars(m).items()}}


def cmd_retract(opts, r, budget) -> int:
    prob = _load(opts)
    r.inputs = _inputs(prob)
    res = classify_retract_curve(prob.poly("f"), _search(opts, prob))
    r.verdict = res.outcome.value
    cert = {
        "curve": rep.poly_text(res.curve),
        "constant": rep.q(res.constant) if res.constant is not None else None,
        "normal_form": rep.poly_text(res.normal_form),
        "trail": [_move(m) for m in res.automorphism_trail],
    }
    if res.report is not None:
        cert["criterion"] = rep.criterion(res.report, prob.context)
        r.notes.extend(res.report.notes)
    r.certificates = cert
    r.notes.extend(res.notes)
    return EXIT_NEGATIVE if res.outcome is Outcome.INCONCLUSIVE else EXIT_OK


def cmd_singular(opts, r, budget) -> int:
    if opts.example:
        k = 0 if opts.example == "ex31" else opts.k
        if opts.example == "ex32" and k < 1:
            raise InputError("ex32 needs --k >= 1")
        a = analyze_curves(k, budget, track_cofactors=True)
        r.inputs = {"example": opts.example, "k": k}
        r.verdict = "NoCommonZero" if a.unit_final.no_common_zero else "Unknown"
        cof = a.unit_final.unit_certificate()
        r.certificates = {
            "initial_gradient_zeros": [[rep.q(v) for v in pt] for pt in a.gradient_zeros_initial.points],
            "initial_values_at_point": [rep.q(v) for v in a.initial_values],
            "final_gradients": [rep.poly_text(g) for g in a.unit_final.basis.generators],
            "final_basis": [rep.poly_text(g) for g in a.unit_final.basis.elements],
            "unit_cofactors": [rep.poly_text(h) for h in cof] if cof else None,
            "p2_gradient_zeros": [[rep.q(v) for v in pt] for pt in a.p2_gradient_zeros.points],
            "q2_gradient_at_p2_zero": [rep.q(v) for v in a.q2_gradient_at_p2_zero],
        }
        r.agreement = [c.as_dict() for c in a.claims]
        for c in a.claims:
            if not c.agrees:
                r.notes.append(f"discrepancy: {c.label}: stated {c.as_dict()['stated']}, computed {c.as_dict()['computed']}")
        return EXIT_OK if a.unit_final.no_common_zero else EXIT_NEGATIVE

    prob = _load(opts)
    r.inputs = _inputs(prob)
    polys = prob.poly_list("polys")
    grads = gradient_system(*polys)
    res = common_zero_exists(grads, budget=budget, track_cofactors=True)
    cert = {
        "gradients": [rep.poly_text(g) for g in grads],
        "basis": [rep.poly_text(g) for g in res.basis.elements],
    }
    if res.no_common_zero:
        r.verdict = "NoCommonZero"
        cert["unit_cofactors"] = [rep.poly_text(h) for h in res.unit_certificate()]
    else:
        r.verdict = "Unknown"
        try:
            zeros = rational_common_zeros(grads, budget)
        except NotZeroDimensional as exc:
            r.notes.append(f"gradient ideal is not zero-dimensional: {exc}")
        else:
            cert["rational_zeros"] = [[rep.q(v) for v in pt] for pt in zeros.points]
            cert["complete_over_rationals"] = zeros.complete_over_rationals
            cert["unresolved_degrees"] = zeros.unresolved_degrees
            cert["on_variety"] = []
            for pt in zeros.points:
                values, ok = on_variety(pt, polys)
                cert["on_variety"].append({"point": [rep.q(v) for v in pt], "values": [rep.q(v) for v in values], "vanishes": ok})
    r.certificates = cert
    return EXIT_OK if res.no_common_zero else EXIT_NEGATIVE


def cmd_replay(opts, r, budget) -> int:
    which = opts.which
    k = 0 if which == "ex31" else opts.k
    trace = replay_example(which, k)
    ok = replay_matches(trace, k)
    r.inputs = {"example": which, "k": k}
    r.verdict = "Match" if ok else "Mismatch"
    snaps = [trace.initial] + trace.snapshots
    r.certificates = {
        "steps": [_step(s) for s in trace.steps],
        "snapshots": [
            {"vars": list(p.context.names), "relations": [rep.poly_text(x) for x in p.relations], "display": p.display()}
            for p in snaps
        ],
        "revalidated": trace.revalidate() is None,
    }
    return EXIT_OK if ok else EXIT_NEGATIVE


def _step(s) -> dict:
    out = {"move": type(s).__name__}
    for k, v in vars(s).items():
        out[k] = rep.poly_text(v) if hasattr(v, "context") else v
    return out


HANDLERS = {
    "gb": cmd_gb, "nf": cmd_nf, "newton": cmd_newton, "hadas": cmd_hadas,
    "pair-power": cmd_pair_power, "pair-product": cmd_pair_product,
    "check-t11": cmd_check_t11, "check-c12": cmd_check_c12,
    "check-t13": cmd_check_t13, "check-c14": cmd_check_c14,
    "retract": cmd_retract, "singular": cmd_singular, "replay": cmd_replay,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="embedcheck", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH", help="problem file")
    common.add_argument("--order", help="pure lex order literal, least first, e.g. 'z<y<x'")
    common.add_argument("--all-orders", action="store_true", help="search every pure lex order")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--budget", type=int, metavar="N", help="cap on S-pair reductions")
    common.add_argument("--no-timing", action="store_true", help="omit timing (byte-stable output)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "replay":
            sp.add_argument("which", choices=["ex31", "ex32"])
            sp.add_argument("--k", type=int, default=1, help="number of t-variables for ex32")
        if name == "singular":
            sp.add_argument("--example", choices=["ex31", "ex32"])
            sp.add_argument("--k", type=int, default=1)
    return parser


def _render_text(r: rep.Report) -> str:
    lines = [f"{r.command}: {r.verdict}"]
    for key, value in r.certificates.items():
        lines.append(f"  {key}: {value}")
    for a in r.agreement:
        mark = "agrees" if a["agrees"] else "DISCREPANCY"
        lines.append(f"  [{mark}] {a['label']}: stated {a['stated']}, computed {a['computed']}")
    for note in r.notes:
        lines.append(f"  note: {note}")
    if r.timing:
        lines.append(f"  time: {r.timing['seconds']} s")
    return "\n".join(lines) + "\n"


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    budget = Budget(max_pairs=opts.budget) if opts.budget else Budget()
    r = rep.Report(command=opts.command)
    r.args = {k: v for k, v in sorted(vars(opts).items()) if k not in ("command", "no_timing") and v not in (None, False)}
    r.limits = {"max_pairs": budget.max_pairs, "max_degree": budget.max_degree, "exceeded": False, "detail": None}
    start = time.perf_counter()
    try:
        code = HANDLERS[opts.command](opts, r, budget)
        code = EXIT_OK if code is None else code
    except BudgetExceeded as exc:
        r.verdict = "BudgetExceeded"
        r.limits["exceeded"] = True
        r.limits["detail"] = str(exc)
        code = EXIT_BUDGET
    except (ParseError, HypothesisError, InputError, MoveError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        r.verdict = "InputError"
        r.notes.append(msg)
        code = EXIT_INPUT
        if not opts.json:
            stderr.write(f"error: {msg}\n")
            return code
    r.exit_code = code
    if not opts.no_timing:
        r.timing = {"seconds": f"{time.perf_counter() - start:.6f}"}
    out = r.to_json() if opts.json else _render_text(r)
    stdout.write(out)
    stdout.flush()
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
