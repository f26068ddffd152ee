"""Text grammar for polynomials: parsing and canonical printing.

Grammar (no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | IDENT | "(" expr ")"

Division is only allowed by nonzero rational constants, so ``3/4*x1`` parses.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Context, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()])|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


def _tokenize(text: str, line: int, col0: int):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        num, ident, op, bad = m.groups()
        start = m.start(m.lastindex) if m.lastindex else m.end()
        col = col0 + start
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r}", line, col)
        if op == "**":
            raise ParseError("use '^' for powers", line, col)
        if num is not None:
            toks.append(("num", int(num), col))
        elif ident is not None:
            toks.append(("id", ident, col))
        elif op is not None:
            toks.append(("op", op, col))
        pos = m.end()
    toks.append(("end", None, col0 + len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ctx: Context, line: int, col0: int):
        self.ctx = ctx
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "id") or tok[1] == "(":
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if not q.is_constant or q.is_zero:
                    self.error("division only by a nonzero constant", tok)
                p = p.scale(Fraction(1) / Fraction(q.constant_value()))
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            p = p ** tok[1]
        return p

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ctx.const(val)
        if kind == "id":
            if val not in self.ctx.names:
                self.error(f"undeclared identifier {val!r}", tok)
            return self.ctx.gen(val)
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                self.error("expected ')'", close)
            return p
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ctx: Context, line: int = 1, col0: int = 1) -> Polynomial:
    return _Parser(text, ctx, line, col0).parse()


def _fmt_rat(c) -> str:
    return str(c)


def _fmt_monomial(ctx: Context, e) -> str:
    parts = []
    for name, k in zip(ctx.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _fmt_term(coef, mono: str) -> tuple[str, bool]:
    """Return (text without sign, negative?)."""
    neg = coef < 0
    a = -coef if neg else coef
    if not mono:
        return _fmt_rat(a), neg
    if a == 1:
        return mono, neg
    return f"{_fmt_rat(a)}*{mono}", neg


def _join(pieces) -> str:
    out = []
    for k, (txt, neg) in enumerate(pieces):
        if k == 0:
            out.append(("-" if neg else "") + txt)
        else:
            out.append((" - " if neg else " + ") + txt)
    return "".join(out) if out else "0"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in descending graded-lex order, x_n highest."""
    return _join(_fmt_term(c, _fmt_monomial(p.ctx, e)) for e, c in p.sorted_terms())


def format_recursive(p: Polynomial, x=None) -> str:
    """Print grouped by powers of ``x`` (default: main variable), e.g. ``(u - 1)*x2^2 + x2 + u^2 - u``."""
    if p.is_zero:
        return "0"
    if x is None:
        top = p.top_position()
        if top < 0:
            return format_polynomial(p)
        x = top
    pos = p.ctx.position(x)
    name = p.ctx.names[pos]
    pieces = []
    coeffs = p.coeff_list(pos)
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero:
            continue
        if k == 0:
            pieces.extend(_fmt_term(v, _fmt_monomial(p.ctx, e)) for e, v in c.sorted_terms())
            continue
        xk = name if k == 1 else f"{name}^{k}"
        if c.nterms == 1:
            ((e, v),) = c.terms.items()
            mono = _fmt_monomial(p.ctx, e)
            pieces.append(_fmt_term(v, f"{mono}*{xk}" if mono else xk))
        else:
            inner = format_polynomial(c)
            if inner.startswith("-"):
                inner = format_polynomial(-c)
                pieces.append((f"({inner})*{xk}", True))
            else:
                pieces.append((f"({inner})*{xk}", False))
    return _join(pieces)
