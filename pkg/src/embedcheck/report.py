"""JSON reports (schema ``report-v1``) and their serializers.

Rationals are always written as strings such as ``"-15/16"``; exponent
vectors are lists of integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .criteria import CriterionReport, IsoPair
from .newton import ConvexCombination, NewtonPolytope, SeparatingFunctional
from .poly import Polynomial, VarContext
from .textio import format_monomial, format_rational, print_canonical

SCHEMA_VERSION = "report-v1"


@dataclass
class Report:
    command: str
    args: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    verdict: str | None = None
    exit_code: int = 0
    certificates: dict = field(default_factory=dict)
    agreement: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timing: dict | None = None
    limits: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "args": self.args,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "exit_code": self.exit_code,
            "certificates": self.certificates,
            "agreement": self.agreement,
            "notes": self.notes,
            "timing": self.timing,
            "limits": self.limits,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(
            command=d["command"],
            args=d["args"],
            inputs=d["inputs"],
            verdict=d["verdict"],
            exit_code=d["exit_code"],
            certificates=d["certificates"],
            agreement=d["agreement"],
            notes=d["notes"],
            timing=d["timing"],
            limits=d["limits"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    text = resources.files("embedcheck").joinpath("schemas/report-v1.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(data: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match the schema."""
    import jsonschema

    jsonschema.validate(data, load_schema())


# -- value encoders ---------------------------------------------------------------------


def q(c) -> str:
    return format_rational(Fraction(c))


def poly_text(p: Polynomial | None, order=None) -> str | None:
    return None if p is None else print_canonical(p, order)


def monomial(m: tuple, ctx: VarContext) -> dict:
    return {"exponents": list(m), "text": format_monomial(m, ctx)}


def functional(cert: SeparatingFunctional | None) -> dict | None:
    if cert is None:
        return None
    return {"functional": [q(v) for v in cert.functional], "threshold": q(cert.threshold)}


def polytope(poly: NewtonPolytope) -> dict:
    points = []
    for pt in poly.points:
        cert = poly.certificates[pt]
        entry = {"point": list(pt), "vertex": pt in poly.vertices}
        if isinstance(cert, SeparatingFunctional):
            entry["separating"] = functional(cert)
        elif isinstance(cert, ConvexCombination):
            entry["combination"] = [{"point": list(s), "weight": q(w)} for s, w in cert.weights]
        points.append(entry)
    return {"points": points, "vertices": [list(v) for v in poly.vertices]}


def pair(p: IsoPair) -> dict:
    ctx = p.context
    return {
        "construction": p.construction.value,
        "vars": list(ctx.names),
        "source": [poly_text(g) for g in p.source.generators],
        "target": [poly_text(g) for g in p.target.generators],
        "map": {name: poly_text(img) for name, img in p.map.images.items()},
        "data": {
            k: (poly_text(v) if isinstance(v, Polynomial) else v) for k, v in p.data.items()
        },
    }


def criterion(r: CriterionReport, ctx: VarContext) -> dict:
    return {
        "criterion": r.criterion,
        "verdict": r.verdict.value,
        "order_used": r.order_used.literal() if r.order_used else None,
        "gb_leading_monomials": [monomial(m, ctx) for m in r.gb_leading_monomials],
        "gb_elements": [poly_text(g, r.order_used) for g in r.gb_elements],
        "hadas_witness": list(r.hadas_witness) if r.hadas_witness else None,
        "hadas_certificate": functional(r.hadas_certificate),
        "divisibility_witness": poly_text(r.divisibility_witness),
        "surjectivity_residue": poly_text(r.surjectivity_residue),
        "failed_clause": r.failed_clause,
        "colliding_monomial": monomial(r.colliding_monomial, ctx) if r.colliding_monomial else None,
        "budget_exceeded": r.budget_exceeded,
    }
