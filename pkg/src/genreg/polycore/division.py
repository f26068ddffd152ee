"""Pseudo-division, successive pseudo-remainders and exact division."""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial


class InexactDivisionError(ArithmeticError):
    pass


def pseudo_divide(f: Polynomial, p: Polynomial, x) -> tuple[Polynomial, Polynomial, int]:
    """Classical pseudo-division w.r.t. ``x``.

    Returns ``(q, r, k)`` with ``initial(p)^k * f = q*p + r``, ``deg(r, x) < deg(p, x)``
    and ``k = deg(f, x) - deg(p, x) + 1`` (or ``k = 0`` when f is already reduced).
    """
    ctx = f.ctx
    pos = ctx.position(x)
    l = p.degree(pos)
    if l == 0:
        raise ValueError(f"pseudo-division by a polynomial free of {ctx.names[pos]}")
    m = f.degree(pos)
    if f.is_zero or m < l:
        return ctx.zero, f, 0
    P = p.coeff_list(pos)
    lc = P[l]
    R = f.coeff_list(pos)
    e = m - l + 1
    lc_pows = [ctx.one]
    for _ in range(e):
        lc_pows.append(lc_pows[-1] * lc)
    Q = [ctx.zero] * e
    for k in range(m, l - 1, -1):
        c = R[k]
        s = k - l
        if not c.is_zero:
            Q[s] = c * lc_pows[s]
        # R <- lc*R - c*x^s*p, dropping degree k
        newR = []
        for j in range(k):
            v = R[j] * lc if not R[j].is_zero else R[j]
            if not c.is_zero and j >= s:
                v = v - c * P[j - s]
            newR.append(v)
        R = newR
    q = Polynomial.from_coeff_list(ctx, pos, Q)
    r = Polynomial.from_coeff_list(ctx, pos, R)
    return q, r, e


def prem(f: Polynomial, p: Polynomial, x) -> Polynomial:
    return pseudo_divide(f, p, x)[1]


def pquo(f: Polynomial, p: Polynomial, x) -> Polynomial:
    return pseudo_divide(f, p, x)[0]


def sprem(f: Polynomial, T) -> Polynomial:
    """Successive pseudo-remainder w.r.t. a triangular set (highest member first)."""
    polys = list(getattr(T, "polys", T))
    if not polys:
        raise ValueError("empty triangular set")
    for t in reversed(polys):
        if f.is_zero:
            break
        f = prem(f, t, t.top_position())
    return f


def is_reduced(f: Polynomial, T) -> bool:
    for t in getattr(T, "polys", T):
        v = t.top_position()
        if f.degree(v) >= t.degree(v):
            return False
    return True


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g, raising :class:`InexactDivisionError` unless g divides f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return f
    v = g.top_position()
    if v < 0:
        return f.scale(Fraction(1) / Fraction(g.constant_value()))
    ctx = f.ctx
    dg = g.degree(v)
    df = f.degree(v)
    if df < dg:
        raise InexactDivisionError("degree of divisor exceeds dividend")
    G = g.coeff_list(v)
    lcg = G[dg]
    R = f.coeff_list(v)
    Q = [ctx.zero] * (df - dg + 1)
    for k in range(df, dg - 1, -1):
        c = R[k]
        if c.is_zero:
            continue
        q = exact_div(c, lcg)
        s = k - dg
        Q[s] = q
        for j in range(dg):
            if not G[j].is_zero:
                R[s + j] = R[s + j] - q * G[j]
    for j in range(dg):
        if not R[j].is_zero:
            raise InexactDivisionError("nonzero remainder")
    return Polynomial.from_coeff_list(ctx, v, Q)


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        exact_div(f, g)
    except InexactDivisionError:
        return False
    return True
