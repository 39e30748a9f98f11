import io
import json
import subprocess
import sys

import pytest

from embedcheck import VarContext
from embedcheck import report as rep
from embedcheck.cli import COMMANDS, run_cli
from embedcheck.presentation import Presentation, final_curves, initial_curves
from embedcheck.textio import print_canonical

from conftest import GOLDEN, PROBLEMS, XYZ, P

ROOT = PROBLEMS.parent


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(args), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _in_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def test_check_c12_power_pair():
    code, out, _ = run("check-c12", "--in", "problems/power_xy_k2.prob", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NonExtendable"
    assert data["certificates"]["criterion"]["hadas_witness"] == [1, 1]


def test_replay_ex31():
    code, out, _ = run("replay", "ex31", "--json")
    assert code == 0
    data = json.loads(out)
    last = data["certificates"]["snapshots"][-1]
    ctx = VarContext(tuple(last["vars"]))
    final = Presentation(ctx, tuple(P(t, ctx) for t in last["relations"]))
    p2, q2 = final_curves(0)
    assert final.canonical(XYZ) == Presentation(XYZ, (p2, q2)).canonical()


def test_bad_variable_is_an_input_error():
    code, out, err = run("gb", "--in", "problems/bad_variable.prob")
    assert code == 2
    assert "line 2, column 14" in err and "'w'" in err
    code, out, _ = run("gb", "--in", "problems/bad_variable.prob", "--json")
    assert code == 2
    assert json.loads(out)["verdict"] == "InputError"


@pytest.mark.parametrize(
    "args",
    [
        ["gb"],
        ["gb", "--in", "problems/missing.prob"],
        ["frobnicate"],
        ["check-c12", "--in", "problems/retract_coordinate.prob"],
        ["replay", "ex32", "--k", "0"],
        ["gb", "--in", "problems/gb_cyclic.prob", "--order", "x<w"],
    ],
)
def test_input_errors(args):
    assert run(*args)[0] == 2


def test_budget_exit_code():
    code, out, _ = run("gb", "--in", "problems/budget_hard.prob", "--budget", "5", "--json")
    assert code == 3
    data = json.loads(out)
    assert data["verdict"] == "BudgetExceeded" and data["limits"]["exceeded"]


CASES = {
    "gb_cyclic": ["gb", "--in", "problems/gb_cyclic.prob"],
    "nf_member": ["nf", "--in", "problems/nf_member.prob"],
    "newton_p1": ["newton", "--in", "problems/newton_p1.prob"],
    "hadas_x_plus_xy": ["hadas", "--in", "problems/hadas_x_plus_xy.prob"],
    "pair_power": ["pair-power", "--in", "problems/power_xy_k2.prob"],
    "pair_product": ["pair-product", "--in", "problems/product_neg_x2_y.prob"],
    "check_t11": ["check-t11", "--in", "problems/power_xy_k2.prob"],
    "check_c12": ["check-c12", "--in", "problems/power_xy_k2.prob"],
    "check_c12_x_plus_y": ["check-c12", "--in", "problems/power_x_plus_y.prob"],
    "check_t13": ["check-t13", "--in", "problems/product_neg_x2_y.prob"],
    "check_c14": ["check-c14", "--in", "problems/product_neg_x2_y.prob"],
    "check_c14_excluded": ["check-c14", "--in", "problems/product_neg_x_y.prob"],
    "retract_coordinate": ["retract", "--in", "problems/retract_coordinate.prob"],
    "retract_xy_plus_c": ["retract", "--in", "problems/retract_xy_plus_c.prob"],
    "retract_inequivalent": ["retract", "--in", "problems/retract_inequivalent.prob"],
    "singular_p2": ["singular", "--in", "problems/singular_p2_gradient.prob"],
    "singular_ex31": ["singular", "--example", "ex31"],
    "singular_ex32_k1": ["singular", "--example", "ex32", "--k", "1"],
    "replay_ex31": ["replay", "ex31"],
    "replay_ex32_k2": ["replay", "ex32", "--k", "2"],
}

EXPECTED_EXIT = {
    "hadas_x_plus_xy": 1,
    "check_c12_x_plus_y": 1,
    "check_c14_excluded": 1,
    "singular_p2": 1,
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_reports(name, update_golden):
    code, out, _ = run(*CASES[name], "--json", "--no-timing")
    assert code == EXPECTED_EXIT.get(name, 0)
    path = GOLDEN / f"{name}.json"
    if update_golden:
        path.write_text(out, encoding="utf-8", newline="\n")
    assert out == path.read_text(encoding="utf-8")
    data = json.loads(out)
    rep.validate(data)
    assert data["schema"] == "report-v1"
    assert data["exit_code"] == code
    assert rep.Report.from_json(out).to_json() == out


def test_output_is_byte_stable_across_runs():
    a = run(*CASES["check_c14"], "--json", "--no-timing")
    b = run(*CASES["check_c14"], "--json", "--no-timing")
    assert a == b


def test_exit_code_does_not_depend_on_timing():
    for name in ("check_c12", "check_c12_x_plus_y", "singular_p2"):
        timed = run(*CASES[name], "--json")
        untimed = run(*CASES[name], "--json", "--no-timing")
        assert timed[0] == untimed[0]
        assert "seconds" in json.loads(timed[1])["timing"]
        assert json.loads(timed[1])["verdict"] == json.loads(untimed[1])["verdict"]


def test_every_command_has_a_case():
    used = {args[0] for args in CASES.values()}
    assert used == set(COMMANDS)


def test_text_output_lists_discrepancies():
    code, out, _ = run("singular", "--example", "ex31", "--no-timing")
    assert code == 0
    assert out.startswith("singular: NoCommonZero")
    assert "[agrees] gradient common zero of p1, q1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "embedcheck", "check-c12", "--in", "problems/power_xy_k2.prob", "--json"],
        capture_output=True, text=True, cwd=ROOT,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "NonExtendable"


def test_example_curves_reprint_golden(update_golden):
    curves = list(initial_curves(0)) + list(final_curves(0))
    text = "".join(f"{name} = {print_canonical(p)}\n" for name, p in zip(("p1", "q1", "p2", "q2"), curves))
    path = GOLDEN / "curves_ex31.txt"
    if update_golden:
        path.write_text(text, encoding="utf-8", newline="\n")
    assert text == path.read_text(encoding="utf-8")
    prob_text = (PROBLEMS / "curves_ex31.prob").read_text(encoding="utf-8")
    for line in text.splitlines():
        name, printed = line.split(" = ", 1)
        literal = next(l.split(" = ", 1)[1] for l in prob_text.splitlines() if l.startswith(f"poly {name} "))
        assert print_canonical(P(literal, XYZ)) == printed
