"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...], one exponent per context variable
Coefficient = Union[int, Fraction]


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarContext:
    """An ordered list of distinct variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"bad variable name {name!r}")

    @classmethod
    def of(cls, *names: str) -> "VarContext":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self.names

    def extend(self, *names: str) -> "VarContext":
        return VarContext(self.names + tuple(names))

    def unit(self) -> Monomial:
        return (0,) * len(self.names)

    def __str__(self) -> str:
        return " ".join(self.names)


def _grlex_key(m: Monomial):
    return (sum(m), m)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    Terms are a map from exponent tuples to nonzero ``Fraction`` values.
    Iteration order is a fixed graded-lex order so that printing and hashing
    never depend on construction history.
    """

    __slots__ = ("context", "_terms", "_hash")

    def __init__(self, context: VarContext, terms: Mapping | Iterable = ()):
        n = context.arity
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for context {context.names}")
            coeff = _as_fraction(coeff)
            total = clean.get(mono, 0) + coeff
            if total:
                clean[mono] = total
            else:
                clean.pop(mono, None)
        self.context = context
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, context: VarContext, terms: dict) -> "Polynomial":
        # terms must already be canonical: no zero coefficients, Fraction values
        obj = cls.__new__(cls)
        obj.context = context
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, context: VarContext) -> "Polynomial":
        return cls._raw(context, {})

    @classmethod
    def constant(cls, context: VarContext, c: Coefficient) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw(context, {context.unit(): c} if c else {})

    @classmethod
    def one(cls, context: VarContext) -> "Polynomial":
        return cls.constant(context, 1)

    @classmethod
    def var(cls, context: VarContext, name: str, power: int = 1) -> "Polynomial":
        i = context.index(name)
        mono = tuple(power if j == i else 0 for j in range(context.arity))
        return cls._raw(context, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, context: VarContext, mono: Monomial, coeff: Coefficient = 1) -> "Polynomial":
        return cls(context, {tuple(mono): coeff})

    @classmethod
    def gens(cls, context: VarContext) -> tuple:
        return tuple(cls.var(context, name) for name in context.names)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A fresh copy of the term map."""
        return dict(self._terms)

    def items(self):
        """Terms in ascending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    def monomials(self) -> list:
        return [m for m, _ in self.items()]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        unit = self.context.unit()
        return all(m == unit for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(self.context.unit(), Fraction(0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one variable. The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(m) for m in self._terms)
        i = self.context.index(name)
        return max(m[i] for m in self._terms)

    def variables(self) -> tuple:
        """Names of variables that actually occur, in context order."""
        used = [False] * self.context.arity
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.context.names, used) if u)

    def occurs(self, name: str) -> bool:
        i = self.context.index(name)
        return any(m[i] for m in self._terms)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ContextMismatch(
                f"context mismatch: {self.context.names} vs {other.context.names}"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.context, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.context, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        return power(self, k)

    def scale(self, c: Coefficient) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.context)
        return Polynomial._raw(self.context, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c: Fraction) -> "Polynomial":
        return Polynomial._raw(
            self.context,
            {tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self._terms.items()},
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.context == other.context and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.context, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self._terms.items())))
        return self._hash

    # -- conveniences -----------------------------------------------------------

    def subs(self, images: Mapping) -> "Polynomial":
        return substitute(self, images)

    def diff(self, name: str) -> "Polynomial":
        return diff(self, name)

    def __call__(self, *point) -> Fraction:
        return evaluate(self, point)

    def to_context(self, context: VarContext) -> "Polynomial":
        """Re-express in another context, matching variables by name."""
        if context == self.context:
            return self
        positions = []
        for i, name in enumerate(self.context.names):
            if name in context:
                positions.append((i, context.index(name)))
            elif self.occurs(name):
                raise ContextMismatch(f"variable {name!r} occurs but is missing from {context.names}")
        out = {}
        for m, c in self._terms.items():
            e = [0] * context.arity
            for i, j in positions:
                e[j] = m[i]
            out[tuple(e)] = c
        return Polynomial._raw(context, out)

    def __str__(self) -> str:
        from .textio import print_canonical

        return print_canonical(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, vars={' '.join(self.context.names)!r})"


# -- module-level operations ---------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for m, c in q._terms.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s += c
            if s:
                out[m] = s
            else:
                del out[m]
    return Polynomial._raw(p.context, out)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    out: dict = {}
    get = out.get
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = tuple([a + b for a, b in zip(m1, m2)])
            out[m] = get(m, 0) + c1 * c2
    return Polynomial._raw(p.context, {m: c for m, c in out.items() if c})


def power(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("negative powers are not polynomials")
    result = Polynomial.one(p.context)
    if k < 4:
        for _ in range(k):
            result = mul(result, p)
        return result
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def _target_context(p: Polynomial, images: Mapping) -> VarContext:
    contexts = {img.context for img in images.values()}
    if len(contexts) > 1:
        raise ContextMismatch("substitution images live in different contexts")
    return contexts.pop() if contexts else p.context


def substitute(p: Polynomial, images: Mapping) -> Polynomial:
    """Simultaneous substitution ``name -> image``.

    Images may live in a different (usually extended) context; unmapped
    variables go to the variable of the same name there.
    """
    for name in images:
        p.context.index(name)
    target = _target_context(p, images)
    full = []
    for name in p.context.names:
        if name in images:
            full.append(images[name])
        elif name in target:
            full.append(Polynomial.var(target, name))
        else:
            full.append(None)
    cache: dict = {}

    def pw(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in cache:
            if full[i] is None:
                raise ContextMismatch(
                    f"variable {p.context.names[i]!r} has no image in {target.names}"
                )
            cache[key] = power(full[i], e)
        return cache[key]

    acc: dict = {}
    for m, c in p._terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(m):
            if e:
                term = mul(term, pw(i, e))
        for tm, tc in term._terms.items():
            acc[tm] = acc.get(tm, 0) + tc
    return Polynomial._raw(target, {m: c for m, c in acc.items() if c})


def diff(p: Polynomial, name: str) -> Polynomial:
    i = p.context.index(name)
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(p.context, out)


def evaluate(p: Polynomial, point: Sequence) -> Fraction:
    if len(point) != p.context.arity:
        raise ValueError(
            f"point has {len(point)} coordinates, context has {p.context.arity} variables"
        )
    vals = [_as_fraction(v) for v in point]
    total = Fraction(0)
    for m, c in p._terms.items():
        t = c
        for v, e in zip(vals, m):
            if e:
                t *= v ** e
        total += t
    return total


def try_divide(p: Polynomial, d: Polynomial) -> Polynomial | None:
    """Exact quotient ``p / d``, or ``None`` when ``d`` does not divide ``p``."""
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    # Division by a single polynomial under a monomial order leaves remainder 0 iff d | p.
    lead = max(d._terms, key=_grlex_key)
    lc = d._terms[lead]
    rest = dict(p._terms)
    quot: dict = {}
    while rest:
        m = max(rest, key=_grlex_key)
        if any(a < b for a, b in zip(m, lead)):
            return None
        qm = tuple(a - b for a, b in zip(m, lead))
        qc = rest[m] / lc
        quot[qm] = qc
        for dm, dc in d._terms.items():
            t = tuple(a + b for a, b in zip(dm, qm))
            v = rest.get(t, 0) - qc * dc
            if v:
                rest[t] = v
            else:
                rest.pop(t, None)
    q = Polynomial._raw(p.context, quot)
    if mul(q, d) != p:
        raise ArithmeticError("exact division failed its re-multiplication check")
    return q
