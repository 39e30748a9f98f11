"""Text format for polynomials and problem files.

Polynomial grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' INT)?
    base     := rational | NAME | '(' expr ')'
    rational := INT ('/' INT)?

Multiplication is always explicit.  A leading minus is accepted only at the
head of an expression, i.e. at the very start or right after ``(``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .order import MonomialOrder, sorted_terms
from .poly import Polynomial, VarContext


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"column {pos + 1}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, context: VarContext):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ctx = context

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok) -> str:
        if tok[0] == "end":
            return "end of input"
        return repr(str(tok[1]))

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError(
                    f"exponent must be a non-negative integer, found {self._describe(tok)}", tok[2]
                )
            self.take()
            base = base ** tok[1]
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int":
                    raise ParseError(
                        f"denominator must be a positive integer, found {self._describe(den)}",
                        den[2],
                    )
                self.take()
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(tok[1], den[1])
            return Polynomial.constant(self.ctx, value)
        if kind == "name":
            self.take()
            if tok[1] not in self.ctx:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            return Polynomial.var(self.ctx, tok[1])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {self._describe(tok)}", tok[2])


def parse_polynomial(text: str, context: VarContext) -> Polynomial:
    parser = _Parser(text, context)
    if parser.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    result = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {parser._describe(tok)}", tok[2])
    return result


def format_monomial(m: tuple, context: VarContext) -> str:
    parts = []
    for name, e in zip(context.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_canonical(p: Polynomial, order: MonomialOrder | None = None) -> str:
    """Terms in descending order; reparses to the same polynomial."""
    if p.is_zero():
        return "0"
    order = order or MonomialOrder.default(p.context)
    out = []
    for idx, (m, c) in enumerate(sorted_terms(p, order)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, p.context)
        if mono == "1":
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- problem files -----------------------------------------------------------------


@dataclass
class ProblemFile:
    """Parsed line-oriented problem description.

    Lines are ``vars: x y z``, ``poly NAME = EXPR``, ``order: z<y<x``,
    ``param NAME = VALUE`` and ``use ROLE = NAME [NAME ...]``.  ``#`` starts
    a comment.
    """

    context: VarContext
    polys: dict = field(default_factory=dict)
    order: MonomialOrder | None = None
    params: dict = field(default_factory=dict)
    bindings: dict = field(default_factory=dict)
    source: str = ""

    def poly(self, role: str) -> Polynomial:
        names = self.bindings.get(role)
        if names is None:
            if role in self.polys:
                return self.polys[role]
            raise ParseError(f"no polynomial bound to {role!r} (add 'use {role} = NAME')")
        if len(names) != 1:
            raise ParseError(f"{role!r} must be bound to exactly one polynomial")
        return self.polys[names[0]]

    def poly_list(self, role: str, default_all: bool = True) -> list:
        names = self.bindings.get(role)
        if names is None:
            return list(self.polys.values()) if default_all else []
        return [self.polys[n] for n in names]

    def param_int(self, name: str, default: int | None = None) -> int:
        if name not in self.params:
            if default is None:
                raise ParseError(f"missing parameter {name!r} (add 'param {name} = ...')")
            return default
        raw = self.params[name]
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"parameter {name!r} must be an integer, got {raw!r}") from None


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def parse_problem(text: str) -> ProblemFile:
    context = None
    polys: dict = {}
    order_literal = None
    params: dict = {}
    bindings: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("vars:"):
                if context is not None:
                    raise ParseError("duplicate vars declaration")
                names = line[len("vars:"):].split()
                for n in names:
                    if not _NAME.match(n):
                        raise ParseError(f"bad variable name {n!r}")
                try:
                    context = VarContext(tuple(names))
                except ValueError as exc:
                    raise ParseError(str(exc)) from None
            elif line.startswith("order:"):
                order_literal = line[len("order:"):].strip()
            elif line.startswith("poly "):
                if context is None:
                    raise ParseError("polynomial defined before the vars declaration")
                name, expr_text = _split_assignment(line[len("poly "):])
                if name in polys:
                    raise ParseError(f"polynomial {name!r} defined twice")
                offset = raw.index(expr_text) if expr_text in raw else 0
                try:
                    polys[name] = parse_polynomial(expr_text, context)
                except ParseError as exc:
                    pos = None if exc.pos is None else exc.pos + offset
                    raise ParseError(exc.message, pos) from None
            elif line.startswith("param "):
                name, value = _split_assignment(line[len("param "):])
                params[name] = value
            elif line.startswith("use "):
                role, value = _split_assignment(line[len("use "):])
                names = value.split()
                for n in names:
                    if n not in polys:
                        raise ParseError(f"'use {role}' refers to undefined polynomial {n!r}")
                bindings[role] = names
            else:
                raise ParseError(f"unrecognized line {line!r}")
        except ParseError as exc:
            raise ParseError(exc.message, exc.pos, lineno) from None
    if context is None:
        raise ParseError("missing 'vars:' declaration")
    order = None
    if order_literal is not None:
        try:
            order = MonomialOrder.parse(context, order_literal)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return ProblemFile(context, polys, order, params, bindings, text)


def _split_assignment(s: str) -> tuple:
    if "=" not in s:
        raise ParseError(f"expected NAME = VALUE in {s!r}")
    name, value = s.split("=", 1)
    name = name.strip()
    if not _NAME.match(name):
        raise ParseError(f"bad name {name!r}")
    return name, value.strip()
