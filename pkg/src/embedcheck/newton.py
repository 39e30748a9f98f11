"""Newton polytopes: supports, certified vertex enumeration, and the coordinate-polynomial obstruction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import lp
from .poly import Polynomial


@dataclass(frozen=True)
class SeparatingFunctional:
    """``functional . v > threshold >= functional . s`` for every other support point ``s``."""

    functional: tuple
    threshold: Fraction

    def verify(self, vertex: tuple, others: Iterable[tuple]) -> bool:
        def dot(u):
            return sum(Fraction(a) * b for a, b in zip(self.functional, u))

        return dot(vertex) > self.threshold and all(dot(s) <= self.threshold for s in others)


@dataclass(frozen=True)
class ConvexCombination:
    """``point = sum(weight * s)`` with non-negative weights summing to one."""

    weights: tuple  # ((point, weight), ...)

    def verify(self, point: tuple) -> bool:
        if any(w < 0 for _, w in self.weights) or sum(w for _, w in self.weights) != 1:
            return False
        combo = [sum(w * s[i] for s, w in self.weights) for i in range(len(point))]
        return all(c == x for c, x in zip(combo, point))


@dataclass(frozen=True)
class NewtonPolytope:
    points: tuple
    vertices: tuple
    certificates: dict

    def is_vertex(self, point) -> bool:
        return tuple(point) in set(self.vertices)

    def verify(self) -> bool:
        """Re-check every certificate by exact arithmetic."""
        pts = set(self.points)
        for pt in self.points:
            cert = self.certificates[pt]
            others = pts - {pt}
            if pt in self.vertices:
                if isinstance(cert, SeparatingFunctional):
                    if not cert.verify(pt, others):
                        return False
                elif others:
                    return False
            else:
                if not isinstance(cert, ConvexCombination) or not cert.verify(pt):
                    return False
                if any(s not in others for s, _ in cert.weights):
                    return False
        return True


def support_points(p: Polynomial) -> frozenset:
    return frozenset(p.terms)


def _test_point(v: tuple, others: list):
    dim = len(v)
    # rows: one per coordinate plus the affine row sum(lambda) = 1
    A = [[s[i] for s in others] for i in range(dim)] + [[1] * len(others)]
    b = list(v) + [1]
    res = lp.phase_one(A, b)
    if not lp.verify(A, b, res):
        raise ArithmeticError(f"simplex certificate for {v} failed re-verification")
    if res.feasible:
        weights = tuple((s, w) for s, w in zip(others, res.solution) if w)
        return False, ConvexCombination(weights)
    y = res.farkas
    return True, SeparatingFunctional(tuple(y[:dim]), -y[dim])


def newton_polytope(points: Iterable) -> NewtonPolytope:
    pts = sorted({tuple(int(e) for e in p) for p in points})
    if not pts:
        raise ValueError("the Newton polytope of an empty support is undefined")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise ValueError(f"points of mixed dimension {sorted(dims)}")
    vertices = []
    certs: dict = {}
    for v in pts:
        others = [s for s in pts if s != v]
        if not others:
            vertices.append(v)
            certs[v] = None
            continue
        extreme, cert = _test_point(v, others)
        if extreme:
            vertices.append(v)
        certs[v] = cert
    return NewtonPolytope(tuple(pts), tuple(vertices), certs)


def polytope_vertices(points: Iterable) -> frozenset:
    return frozenset(newton_polytope(points).vertices)


@dataclass(frozen=True)
class HadasResult:
    """Outcome of the coordinate-polynomial vertex test.

    ``passes`` means every vertex lies on a coordinate hyperplane (the test is
    only a necessary condition for being a coordinate).  Otherwise ``witness``
    is a vertex with all exponents positive and ``certificate`` separates it
    from the rest of the support.
    """

    passes: bool
    witness: tuple | None
    certificate: SeparatingFunctional | None
    polytope: NewtonPolytope

    def verify(self, p: Polynomial) -> bool:
        support = support_points(p)
        if self.passes:
            return all(0 in v for v in polytope_vertices(support))
        w = self.witness
        if w not in support or not all(e > 0 for e in w):
            return False
        others = support - {w}
        if not others:
            return True
        return self.certificate is not None and self.certificate.verify(w, others)


def hadas_coordinate_test(p: Polynomial) -> HadasResult:
    if p.is_zero():
        raise ValueError("the coordinate test needs a nonzero polynomial")
    poly = newton_polytope(support_points(p))
    positive = [v for v in poly.vertices if all(e > 0 for e in v)]
    if not positive:
        return HadasResult(True, None, None, poly)
    witness = max(positive)
    return HadasResult(False, witness, poly.certificates[witness], poly)
