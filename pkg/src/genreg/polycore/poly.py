"""Sparse multivariate polynomials with rational coefficients over an ordered context.

A :class:`Context` fixes the indeterminates ``u1 < ... < ud < x1 < ... < xn``.
Exponent vectors are tuples of length ``d + n`` laid out in that order, so
parameter positions come first and variable ``x_k`` sits at position
``d + k - 1``.

Coefficients are Python ``int`` whenever integral and ``Fraction`` otherwise.
Keeping integers unboxed matters: most of the exact work (pseudo-division,
subresultants) never leaves the integers.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_add = operator.add


class ContextMismatchError(ValueError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_rational(c) -> int | Fraction:
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


@dataclass(frozen=True)
class Context:
    """Ordered indeterminates: parameters below variables."""

    params: tuple[str, ...]
    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a context needs at least one variable")
        names = self.params + self.variables
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate indeterminate names in {names}")
        for nm in names:
            if not _IDENT.match(nm):
                raise ValueError(f"invalid identifier {nm!r}")

    @property
    def d(self) -> int:
        return len(self.params)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return self.params + self.variables

    @property
    def nvars(self) -> int:
        return len(self.params) + len(self.variables)

    def position(self, x) -> int:
        """Exponent-vector position of an indeterminate given by name or position."""
        if isinstance(x, str):
            try:
                return self.names.index(x)
            except ValueError:
                raise KeyError(f"unknown indeterminate {x!r}") from None
        if isinstance(x, int) and 0 <= x < self.nvars:
            return x
        raise KeyError(f"unknown indeterminate {x!r}")

    def var_position(self, k: int) -> int:
        """Position of the variable x_k (1-based class index)."""
        if not 1 <= k <= self.n:
            raise KeyError(f"variable index {k} outside 1..{self.n}")
        return self.d + k - 1

    def gen(self, name: str) -> Polynomial:
        pos = self.position(name)
        e = [0] * self.nvars
        e[pos] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.gen(nm) for nm in self.names)

    def const(self, c) -> Polynomial:
        c = as_rational(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def without_params(self) -> Context:
        return Context((), self.variables)

    def parse(self, text: str) -> Polynomial:
        from .textio import parse_polynomial

        return parse_polynomial(text, self)


@dataclass(frozen=True)
class ParameterPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _term_key(e):
    return (sum(e), e[::-1])


class Polynomial:
    """Immutable sparse polynomial. ``terms`` maps exponent tuples to nonzero rationals."""

    __slots__ = ("ctx", "terms", "_hash", "_degs")

    def __init__(self, ctx: Context, terms: dict | None = None):
        self.ctx = ctx
        self.terms = terms if terms is not None else {}
        self._hash = None
        self._degs = None

    @classmethod
    def from_terms(cls, ctx: Context, terms: Mapping | Iterable) -> Polynomial:
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != ctx.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            out[e] = out.get(e, 0) + as_rational(c)
        return cls(ctx, {e: _norm(c) for e, c in out.items() if c != 0})

    # --- basic structure -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        (e,) = self.terms
        return not any(e)

    def constant_value(self):
        """The rational value of a constant polynomial."""
        if not self.terms:
            return 0
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    @property
    def nterms(self) -> int:
        return len(self.terms)

    def _degrees(self):
        if self._degs is None:
            degs = [0] * self.ctx.nvars
            for e in self.terms:
                for i, v in enumerate(e):
                    if v > degs[i]:
                        degs[i] = v
            self._degs = tuple(degs)
        return self._degs

    def degree(self, x) -> int:
        return self._degrees()[self.ctx.position(x)]

    def top_position(self) -> int:
        """Highest exponent position with positive degree, or -1 for constants."""
        degs = self._degrees()
        for i in range(len(degs) - 1, -1, -1):
            if degs[i]:
                return i
        return -1

    def positions(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self._degrees()) if v)

    @property
    def cls(self) -> int:
        if not self.terms:
            raise ValueError("class of the zero polynomial is undefined")
        top = self.top_position()
        return max(0, top - self.ctx.d + 1)

    def involves(self, x) -> bool:
        return self._degrees()[self.ctx.position(x)] > 0

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # --- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatchError("polynomials live in different contexts")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = _norm(v)
                else:
                    del out[e]
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v = v - c
                if v:
                    out[e] = _norm(v)
                else:
                    del out[e]
        return Polynomial(self.ctx, out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial(self.ctx, {})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            if not any(eb):
                return self.scale(cb) if b is other.terms else other.scale(cb)
        out: dict = {}
        get = out.get
        bitems = list(b.items())
        for ea, ca in a.items():
            for eb, cb in bitems:
                e = tuple(map(_add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Polynomial(self.ctx, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = as_rational(c)
        if c == 0:
            return Polynomial(self.ctx, {})
        if c == 1:
            return self
        return Polynomial(self.ctx, {e: _norm(v * c) for e, v in self.terms.items()})

    def __truediv__(self, other):
        # only division by a nonzero rational scalar; polynomial division lives in division.py
        if isinstance(other, Polynomial):
            if not other.is_constant or other.is_zero:
                return NotImplemented
            other = other.constant_value()
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self.terms
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    # --- univariate views ------------------------------------------------------

    def coeff_list(self, x) -> list[Polynomial]:
        """Coefficients w.r.t. one indeterminate, index = degree."""
        pos = self.ctx.position(x)
        deg = self._degrees()[pos]
        buckets: list[dict] = [{} for _ in range(deg + 1)]
        for e, c in self.terms.items():
            k = e[pos]
            if k:
                e = e[:pos] + (0,) + e[pos + 1 :]
            buckets[k][e] = c
        return [Polynomial(self.ctx, b) for b in buckets]

    def coeff(self, x, k: int) -> Polynomial:
        pos = self.ctx.position(x)
        out = {}
        for e, c in self.terms.items():
            if e[pos] == k:
                out[e[:pos] + (0,) + e[pos + 1 :]] = c
        return Polynomial(self.ctx, out)

    def leading_coeff(self, x) -> Polynomial:
        return self.coeff(x, self.degree(x))

    def shift(self, x, k: int) -> Polynomial:
        """Multiply by ``x^k``."""
        if k == 0:
            return self
        pos = self.ctx.position(x)
        return Polynomial(
            self.ctx,
            {e[:pos] + (e[pos] + k,) + e[pos + 1 :]: c for e, c in self.terms.items()},
        )

    @staticmethod
    def from_coeff_list(ctx: Context, x, coeffs: list[Polynomial]) -> Polynomial:
        pos = ctx.position(x)
        out = {}
        for k, p in enumerate(coeffs):
            for e, c in p.terms.items():
                out[e[:pos] + (e[pos] + k,) + e[pos + 1 :]] = c
        return Polynomial(ctx, out)

    def derivative(self, x) -> Polynomial:
        pos = self.ctx.position(x)
        out = {}
        for e, c in self.terms.items():
            k = e[pos]
            if k:
                out[e[:pos] + (k - 1,) + e[pos + 1 :]] = c * k
        return Polynomial(self.ctx, out)

    def leading_term(self):
        """(exponent, coefficient) of the first term in canonical order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    # --- substitution ------------------------------------------------------------

    def subs(self, values: Mapping) -> Polynomial:
        """Substitute exact rationals for some indeterminates (given by name or position)."""
        pos_vals = {self.ctx.position(k): as_rational(v) for k, v in values.items()}
        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for p, v in pos_vals.items():
                if e[p]:
                    c = c * v ** e[p]
                    e2[p] = 0
            if c:
                e2 = tuple(e2)
                out[e2] = out.get(e2, 0) + c
        return Polynomial(self.ctx, {e: _norm(c) for e, c in out.items() if c})

    def to_context(self, ctx: Context) -> Polynomial:
        """Re-embed into another context by matching indeterminate names."""
        if ctx == self.ctx:
            return self
        mapping = []
        for pos, nm in enumerate(self.ctx.names):
            used = self._degrees()[pos] > 0
            if nm in ctx.names:
                mapping.append(ctx.position(nm))
            elif used:
                raise ContextMismatchError(f"{nm} does not exist in the target context")
            else:
                mapping.append(None)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * ctx.nvars
            for pos, v in enumerate(e):
                if v:
                    e2[mapping[pos]] = v
            out[tuple(e2)] = c
        return Polynomial(ctx, out)

    # --- printing ---------------------------------------------------------------

    def __str__(self):
        from .textio import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def specialize(f: Polynomial, a) -> Polynomial:
    """Substitute the parameter point ``a`` exactly; the result lives in the parameter-free context."""
    ctx = f.ctx
    coords = a.coords if isinstance(a, ParameterPoint) else tuple(as_rational(c) for c in a)
    if len(coords) != ctx.d:
        raise ValueError(f"point has {len(coords)} coordinates, context has {ctx.d} parameters")
    d = ctx.d
    target = ctx.without_params()
    out: dict = {}
    for e, c in f.terms.items():
        for i in range(d):
            if e[i]:
                c = c * coords[i] ** e[i]
        if c:
            e2 = e[d:]
            out[e2] = out.get(e2, 0) + c
    return Polynomial(target, {e: _norm(c) for e, c in out.items() if c})
