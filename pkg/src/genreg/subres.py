"""Subresultant chains, regular subresultant chains and resultants.

Indexing follows the determinantal convention: for ``deg(f) = m > deg(g) = l``
the chain is ``S_m = f, S_{m-1} = g, S_{m-2}, ..., S_0`` (so ``mu = m - 1``),
with ``S_j = 0`` for ``l < j < m - 1`` and ``S_l = lc(g)^(m-l-1) * g``.  For
``m = l`` the chain is ``S_{m+1} = f, S_m = g, ...``.  ``S_0`` is the resultant.

The chain is computed by Ducos' pseudo-remainder formulation: every entry below
the top is obtained from its two predecessors by one pseudo-division followed
by an exact division, and defective gaps are filled with Lazard's formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polycore import Polynomial, exact_div, prem


@dataclass(frozen=True)
class SubresultantChain:
    x: int
    f: Polynomial
    g: Polynomial
    S: tuple  # S[j] for j = 0..mu+1

    @property
    def mu(self) -> int:
        return len(self.S) - 2

    def principal(self, j: int) -> Polynomial:
        """R_j: the coefficient of x^j in S_j (R_{mu+1} is lc(f))."""
        if j == self.mu + 1:
            return self.f.leading_coeff(self.x)
        return self.S[j].coeff(self.x, j)

    @property
    def R(self) -> tuple:
        return tuple(self.principal(j) for j in range(self.mu + 2))

    @property
    def resultant(self) -> Polynomial:
        return self.S[0]


@dataclass(frozen=True)
class RegularSubresultantChain:
    base: SubresultantChain
    indices: tuple  # d_0 = 0 < d_1 < ... < d_upsilon

    @property
    def upsilon(self) -> int:
        return len(self.indices) - 1

    def S(self, i: int) -> Polynomial:
        """S_{d_i}; i = upsilon + 1 gives f."""
        if i == len(self.indices):
            return self.base.f
        return self.base.S[self.indices[i]]

    def R(self, i: int) -> Polynomial:
        """R_{d_i}; i = upsilon + 1 gives lc(f)."""
        if i == len(self.indices):
            return self.base.f.leading_coeff(self.base.x)
        return self.base.principal(self.indices[i])


def _lazard(B: Polynomial, x: Polynomial, y: Polynomial, n: int) -> Polynomial:
    """x^n * B / y^n with exact intermediate divisions (n >= 1)."""
    c = x
    for _ in range(n - 1):
        c = exact_div(c * x, y)
    return exact_div(c * B, y)


def subresultant_chain(f: Polynomial, g: Polynomial, x, allow_equal_degrees: bool = False) -> SubresultantChain:
    pos = f.ctx.position(x)
    m, l = f.degree(pos), g.degree(pos)
    if not l > 0 or m < l or (m == l and not allow_equal_degrees):
        raise ValueError(f"subresultant chain needs deg(f) > deg(g) > 0, got {m}, {l}")
    ctx = f.ctx
    mu = m - 1 if m > l else m
    S = [ctx.zero] * (mu + 2)
    S[mu + 1] = f
    S[mu] = g
    lcg = g.leading_coeff(pos)
    if l < mu:
        S[l] = lcg ** (mu - l) * g
    s = lcg ** (m - l)
    A, B = g, prem(f, -g, pos)
    while not B.is_zero:
        d = A.degree(pos)
        e = B.degree(pos)
        S[d - 1] = B
        delta = d - e
        if delta > 1:
            C = _lazard(B, B.leading_coeff(pos), s, delta - 1)
            S[e] = C
        else:
            C = B
        if e == 0:
            break
        B = exact_div(prem(A, -B, pos), s**delta * A.leading_coeff(pos))
        A, s = C, C.leading_coeff(pos)
    return SubresultantChain(pos, f, g, tuple(S))


def regular_indices(chain: SubresultantChain) -> RegularSubresultantChain:
    idx = [0]
    for j in range(1, chain.mu + 1):
        Sj = chain.S[j]
        if not Sj.is_zero and Sj.degree(chain.x) == j:
            idx.append(j)
    return RegularSubresultantChain(chain, tuple(idx))


def regular_subresultant_chain(f: Polynomial, g: Polynomial, x) -> RegularSubresultantChain:
    return regular_indices(subresultant_chain(f, g, x))


def resultant(f: Polynomial, g: Polynomial, x) -> Polynomial:
    """res(f, g, x), equal to the Sylvester determinant with f's rows first."""
    pos = f.ctx.position(x)
    m, l = f.degree(pos), g.degree(pos)
    if m == 0 or l == 0:
        raise ValueError("resultant needs positive degree in both arguments")
    if m >= l:
        return subresultant_chain(f, g, pos, allow_equal_degrees=True).S[0]
    r = subresultant_chain(g, f, pos).S[0]
    return -r if (m * l) % 2 else r


def successive_resultant(f: Polynomial, T) -> Polynomial:
    """res(...res(res(f, T_r), T_{r-1})..., T_1); levels where f lacks mvar(T_i) are skipped."""
    polys = list(getattr(T, "polys", T))
    if not polys:
        raise ValueError("empty triangular set")
    for t in reversed(polys):
        if f.is_zero:
            break
        v = t.top_position()
        if f.degree(v) == 0:
            continue
        f = resultant(f, t, v)
    return f
