"""Exact phase-1 simplex over the rationals (Bland's rule).

Decides feasibility of ``A x = b, x >= 0`` and returns either a feasible
point or a Farkas vector ``y`` with ``y^T A <= 0`` and ``y^T b > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    solution: tuple | None = None  # x, when feasible
    farkas: tuple | None = None  # y, when infeasible
    pivots: int = 0


def phase_one(A: Sequence[Sequence], b: Sequence) -> Feasibility:
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    signs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        s = 1
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            s = -1
        signs.append(s)
        # columns: n originals, m artificials, then rhs
        rows.append(row + [Fraction(int(i == j)) for j in range(m)] + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # objective: minimise the sum of artificials; reduced cost row kept as cost - z
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for r in rows:
        for j in range(width + 1):
            cost[j] -= r[j]

    pivots = 0
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, r in enumerate(rows):
            a = r[entering]
            if a > 0:
                ratio = r[width] / a
                cand = (ratio, basis[i], i)
                if best is None or cand < best:
                    best = cand
        if best is None:  # cannot happen: phase-1 objective is bounded below by 0
            raise ArithmeticError("phase-1 simplex reported an unbounded direction")
        _, _, leave = best
        _pivot(rows, cost, leave, entering)
        basis[leave] = entering
        pivots += 1

    objective = -cost[width]
    if objective == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = rows[i][width]
        return Feasibility(True, solution=tuple(x), pivots=pivots)
    # multipliers of the flipped system: reduced cost of artificial i is 1 - y_i
    y = [(1 - cost[n + i]) * signs[i] for i in range(m)]
    return Feasibility(False, farkas=tuple(y), pivots=pivots)


def _pivot(rows: list, cost: list, r: int, c: int) -> None:
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        prow[:] = [v / piv for v in prow]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                row[:] = [a - f * p for a, p in zip(row, prow)]
    f = cost[c]
    if f:
        cost[:] = [a - f * p for a, p in zip(cost, prow)]


def verify(A: Sequence[Sequence], b: Sequence, result: Feasibility) -> bool:
    """Re-check a feasibility verdict from its certificate alone."""
    m = len(A)
    n = len(A[0]) if m else 0
    if result.feasible:
        x = result.solution
        if x is None or len(x) != n or any(v < 0 for v in x):
            return False
        return all(sum(Fraction(A[i][j]) * x[j] for j in range(n)) == b[i] for i in range(m))
    y = result.farkas
    if y is None or len(y) != m:
        return False
    if sum(y[i] * Fraction(b[i]) for i in range(m)) <= 0:
        return False
    return all(sum(y[i] * Fraction(A[i][j]) for i in range(m)) <= 0 for j in range(n))
