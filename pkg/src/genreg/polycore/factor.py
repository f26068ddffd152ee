"""Multivariate gcd, contents, squarefree splitting and factor sets.

The gcd splits off contents w.r.t. the highest indeterminate, runs a
subresultant PRS on the primitive parts and recurses on the contents.  Most
gcds met in practice are trivial, so a modular image test runs first and
proves coprimality cheaply when it can.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable

from .division import divides, exact_div, prem
from .poly import Polynomial


def integer_content(p: Polynomial) -> Fraction:
    """Positive rational c with p/c integral and primitive over Z."""
    if p.is_zero:
        return Fraction(1)
    num = 0
    den = 1
    for c in p.terms.values():
        c = Fraction(c)
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def normalize(p: Polynomial) -> Polynomial:
    """Integer-primitive associate with positive leading coefficient (canonical order)."""
    if p.is_zero:
        return p
    c = integer_content(p)
    if p.leading_term()[1] < 0:
        c = -c
    if c == 1:
        return p
    return p.scale(1 / c)


def associates(p: Polynomial, q: Polynomial) -> bool:
    return normalize(p) == normalize(q)


def content(f: Polynomial, x, heuristic: bool = True) -> Polynomial:
    """gcd of the coefficients of f regarded as univariate in x (normalized)."""
    pos = f.ctx.position(x)
    cs = [c for c in f.coeff_list(pos) if not c.is_zero]
    if not cs:
        return f.ctx.zero
    cs.sort(key=lambda c: c.nterms)
    g = normalize(cs[0])
    for c in cs[1:]:
        if g.is_constant:
            break
        g = gcd(g, c, heuristic)
    return g if not g.is_constant else f.ctx.one


def primitive_part(f: Polynomial, x, heuristic: bool = True) -> Polynomial:
    c = content(f, x, heuristic)
    if c.is_constant:
        return normalize(f)
    return normalize(exact_div(f, c))


_PRIME = 2**61 - 1
_rng = random.Random(20240917)


def _image_mod_p(f: Polynomial, w: int, point: list) -> list[int] | None:
    """Univariate image of f in position w mod p, low degree first (None if a denominator is 0 mod p)."""
    out = [0] * (f.degree(w) + 1)
    for e, c in f.terms.items():
        if isinstance(c, Fraction):
            if c.denominator % _PRIME == 0:
                return None
            c = c.numerator * pow(c.denominator, -1, _PRIME)
        t = c % _PRIME
        for i, k in enumerate(e):
            if k and i != w:
                t = t * pow(point[i], k, _PRIME) % _PRIME
        out[e[w]] = (out[e[w]] + t) % _PRIME
    return out


def _gcd_degree_mod_p(a: list[int], b: list[int]) -> int:
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a[:]), trim(b[:])
    while b:
        inv = pow(b[-1], -1, _PRIME)
        while len(a) >= len(b):
            q = a[-1] * inv % _PRIME
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] = (a[i + shift] - q * c) % _PRIME
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _provably_coprime(f: Polynomial, g: Polynomial) -> bool:
    """True only if gcd(f, g) is certainly constant; False means "unknown"."""
    common = [w for w in range(f.ctx.nvars) if f.degree(w) > 0 and g.degree(w) > 0]
    if not common:
        return True
    for w in common:
        point = [_rng.randrange(1, _PRIME) for _ in range(f.ctx.nvars)]
        fa = _image_mod_p(f, w, point)
        ga = _image_mod_p(g, w, point)
        if fa is None or ga is None:
            return False
        # leading coefficients must survive so image degrees bound the true gcd degree
        if fa[-1] == 0 or ga[-1] == 0:
            return False
        if _gcd_degree_mod_p(fa, ga) > 0:
            return False
    return True


def _norm_inf(t: dict) -> int:
    return max(abs(c) for c in t.values())


def _eval_at(t: dict, w: int, xi: int) -> dict:
    out: dict = {}
    for e, c in t.items():
        k = e[w]
        e2 = e[:w] + (0,) + e[w + 1 :]
        out[e2] = out.get(e2, 0) + c * xi**k
    return {e: c for e, c in out.items() if c}


def _xi_adic(t: dict, w: int, xi: int) -> dict:
    """Inverse of evaluation at w = xi, taking symmetric residues digit by digit."""
    out: dict = {}
    half = xi // 2
    k = 0
    while t:
        nxt = {}
        for e, c in t.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                out[e[:w] + (k,) + e[w + 1 :]] = r
            q = (c - r) // xi
            if q:
                nxt[e] = q
        t = nxt
        k += 1
    return out


def _icontent(t: dict) -> int:
    c = 0
    for v in t.values():
        c = math.gcd(c, v)
    return c


def _heu_gcd(f: dict, g: dict, ctx) -> dict | None:
    """Heuristic gcd over Z of integer polynomials (term dicts), content included; None when it gives up."""
    cf, cg = _icontent(f), _icontent(g)
    c = math.gcd(cf, cg)
    zero = (0,) * ctx.nvars
    positions = [i for i in range(ctx.nvars) if any(e[i] for e in f) or any(e[i] for e in g)]
    if not positions:
        return {zero: c}
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    w = positions[-1]
    fn, gn = _norm_inf(f), _norm_inf(g)
    B = 2 * min(fn, gn) + 29
    lf = abs(f[max(f, key=lambda e: e[::-1])])
    lg = abs(g[max(g, key=lambda e: e[::-1])])
    xi = max(min(B, 99 * math.isqrt(B)), 2 * min(fn // lf, gn // lg) + 2)
    F, G = Polynomial(ctx, f), Polynomial(ctx, g)
    for _ in range(6):
        ff, gg = _eval_at(f, w, xi), _eval_at(g, w, xi)
        if ff and gg:
            h = _heu_gcd(ff, gg, ctx)
            if h is not None:
                h = _xi_adic(h, w, xi)
                ch = _icontent(h)
                H = Polynomial(ctx, {e: v // ch for e, v in h.items()})
                if divides(H, F) and divides(H, G):
                    return {e: v * c for e, v in H.terms.items()}
        xi = 73794 * xi * math.isqrt(math.isqrt(xi)) // 27011
    return None


def gcd(f: Polynomial, g: Polynomial, heuristic: bool = True) -> Polynomial:
    """Normalized greatest common divisor in Q[U, X].

    ``heuristic=False`` forces the PRS route (the tests compare both).
    """
    ctx = f.ctx
    if f.is_zero:
        return normalize(g)
    if g.is_zero:
        return normalize(f)
    if f.is_constant or g.is_constant:
        return ctx.one
    if f == g:
        return normalize(f)
    if heuristic:
        if _provably_coprime(f, g):
            return ctx.one
        h = _heu_gcd(normalize(f).terms, normalize(g).terms, ctx)
        if h is not None:
            return normalize(Polynomial(ctx, h))
    v = max(f.top_position(), g.top_position())
    if f.degree(v) == 0:
        return gcd(f, content(g, v, heuristic), heuristic)
    if g.degree(v) == 0:
        return gcd(content(f, v, heuristic), g, heuristic)
    cf, cg = content(f, v, heuristic), content(g, v, heuristic)
    c = gcd(cf, cg, heuristic)
    a = f if cf.is_constant else exact_div(f, cf)
    b = g if cg.is_constant else exact_div(g, cg)
    if a.degree(v) < b.degree(v):
        a, b = b, a
    h = _prs_gcd(normalize(a), normalize(b), v, heuristic)
    return normalize(c * h)


def _prs_gcd(a: Polynomial, b: Polynomial, v: int, heuristic: bool = False) -> Polynomial:
    """gcd of v-primitive a, b (deg a >= deg b > 0) by the subresultant PRS."""
    g = h = a.ctx.one
    while True:
        delta = a.degree(v) - b.degree(v)
        r = prem(a, b, v)
        if r.is_zero:
            return primitive_part(b, v, heuristic)
        if r.degree(v) == 0:
            return a.ctx.one
        a, b = b, exact_div(r, g * h**delta)
        g = a.leading_coeff(v)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exact_div(g**delta, h ** (delta - 1))


def lcm_monomial_free(p: Polynomial) -> tuple[list[Polynomial], Polynomial]:
    """Split off indeterminates dividing p: returns (those generators, cofactor)."""
    ctx = p.ctx
    mins = None
    for e in p.terms:
        mins = list(e) if mins is None else [min(a, b) for a, b in zip(mins, e)]
    gens = [ctx.gen(ctx.names[i]) for i, m in enumerate(mins) if m]
    if not gens:
        return [], p
    out = {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()}
    return gens, Polynomial(ctx, out)


def _yun(f: Polynomial, v: int) -> list[Polynomial]:
    """Squarefree factors of f, assumed primitive w.r.t. v with positive degree."""
    fp = f.derivative(v)
    a0 = gcd(f, fp)
    b = exact_div(f, a0)
    c = exact_div(fp, a0)
    d = c - b.derivative(v)
    out = []
    while b.degree(v) > 0:
        a = gcd(b, d)
        if a.degree(v) > 0:
            out.append(normalize(a))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative(v)
    return out


def _sqf_rec(f: Polynomial) -> list[Polynomial]:
    if f.is_constant:
        return []
    v = f.top_position()
    c = content(f, v)
    pp = f if c.is_constant else exact_div(f, c)
    return _sqf_rec(c) + _yun(normalize(pp), v)


def squarefree_primitive_factors(f: Polynomial) -> list[Polynomial]:
    """Pairwise coprime, squarefree, normalized non-constant factors of f, canonically sorted."""
    if f.is_zero:
        raise ValueError("zero polynomial has no factor set")
    f = normalize(f)
    if f.is_constant:
        return []
    gens, rest = lcm_monomial_free(f)
    out = list(gens) + _sqf_rec(rest)
    fs = FactorSet()
    for q in out:
        fs._insert(q)
    return list(fs)


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun decomposition of a univariate polynomial: pairs (a_i, i) with f ~ prod a_i^i."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    v = f.top_position()
    if v < 0:
        return []
    if any(i != v for i in f.positions()):
        raise ValueError("squarefree_decomposition expects a univariate polynomial")
    f = normalize(f)
    fp = f.derivative(v)
    a0 = gcd(f, fp)
    b = exact_div(f, a0)
    c = exact_div(fp, a0)
    d = c - b.derivative(v)
    out = []
    i = 0
    while b.degree(v) > 0:
        i += 1
        a = gcd(b, d)
        if a.degree(v) > 0:
            out.append((normalize(a), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative(v)
    return out


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the squarefree factors of f (normalized); constants map to 1."""
    out = f.ctx.one
    for q in squarefree_primitive_factors(f):
        out = out * q
    return out


def canonical_key(p: Polynomial):
    return (p.total_degree(), p.nterms, str(p))


class FactorSet:
    """Accumulator of pairwise coprime squarefree normalized factors.

    Adding a polynomial splits it first; overlaps with stored factors are
    refined by gcd so the stored factors stay pairwise coprime.
    """

    def __init__(self, polys: Iterable[Polynomial] = ()):
        self._items: list[Polynomial] = []
        for p in polys:
            self.add(p)

    def add(self, p: Polynomial) -> FactorSet:
        if p.is_zero:
            raise ValueError("zero cannot enter a factor set")
        for q in squarefree_primitive_factors(p):
            self._insert(q)
        return self

    def update(self, other: Iterable[Polynomial]) -> FactorSet:
        if isinstance(other, FactorSet):
            for q in other._items:
                self._insert(q)
            return self
        for q in other:
            self.add(q)
        return self

    def _insert(self, f: Polynomial) -> None:
        if f.is_constant or f in self._items:
            return
        for g in self._items:
            h = gcd(f, g)
            if not h.is_constant:
                self._items.remove(g)
                for piece in (h, exact_div(g, h), exact_div(f, h)):
                    if not piece.is_constant:
                        for q in _sqf_rec(normalize(piece)):
                            self._insert(q)
                return
        self._items.append(f)

    def __iter__(self):
        return iter(sorted(self._items, key=canonical_key))

    def __len__(self):
        return len(self._items)

    def __contains__(self, p):
        return normalize(p) in self._items

    def product(self, ctx=None) -> Polynomial:
        out = None
        for q in self._items:
            out = q if out is None else out * q
        if out is None:
            if ctx is None:
                raise ValueError("empty factor set needs a context for its product")
            return ctx.one
        return out

    def copy(self) -> FactorSet:
        fs = FactorSet()
        fs._items = list(self._items)
        return fs

    def __repr__(self):
        return "FactorSet{" + ", ".join(str(q) for q in self) + "}"
