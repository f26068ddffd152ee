"""Weakly relatively simplicial decomposition of a zero-dimensional regular chain.

``wrsd(T, P)`` returns ``[H, G, F]``: chains covering the zeros of T on P = 0
(H) and off P = 0 (G), plus a factor set F in K[U] off whose zero set both
covers survive specialization with every chain specializing well.

The recursion mirrors the algorithm line by line: reduce P, dispatch the
trivial cases, descend when P has lower class, take the resultant shortcut,
and otherwise split along the regular subresultant chain of T_n and P.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import RegularChainZD, dedupe_chains, is_zero_dimensional, iterated_initial_resultant
from .polycore import FactorSet, Polynomial, is_reduced, pquo, sprem
from .subres import regular_subresultant_chain, successive_resultant
from .wu import simplify_for_insertion


@dataclass
class WrsdResult:
    H: list
    G: list
    F: FactorSet = field(default_factory=FactorSet)

    def as_tuple(self):
        return self.H, self.G, self.F


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.depth = 0

    def enter(self):
        self.depth += 1
        if self.depth > self.limit:
            raise RecursionError(f"wrsd recursion deeper than {self.limit}")

    def leave(self):
        self.depth -= 1


def wrsd(T, P: Polynomial) -> WrsdResult:
    polys = tuple(getattr(T, "polys", T))
    if not polys:
        raise ValueError("empty chain")
    if P.ctx != polys[0].ctx:
        raise ValueError("chain and polynomial live in different contexts")
    maxdeg = max(p.degree(p.top_position()) for p in polys)
    budget = _Budget(8 * (polys[0].ctx.n + 1) * (maxdeg + 1) + 32)
    H, G, F = _wrsd(polys, P, budget)
    return WrsdResult(
        [RegularChainZD(h) for h in dedupe_chains(H)],
        [RegularChainZD(g) for g in dedupe_chains(G)],
        F,
    )


def _factor_set(*polys: Polynomial) -> FactorSet:
    fs = FactorSet()
    for p in polys:
        if not p.is_zero:
            fs.add(p)
    return fs


def _wrsd(T: tuple, P: Polynomial, budget: _Budget):
    budget.enter()
    try:
        return _wrsd_body(T, P, budget)
    finally:
        budget.leave()


def _wrsd_body(T: tuple, P: Polynomial, budget: _Budget):
    n = len(T)
    F = _factor_set(iterated_initial_resultant(T))
    if not P.is_zero and not is_reduced(P, T):
        return _wrsd(T, sprem(P, T), budget)
    if P.is_zero:
        return [T], [], F
    k = P.cls
    if k == 0:
        F.add(P)
        return [], [T], F
    if k < n:
        H1, G1, F1 = _wrsd(T[:k], P, budget)
        tail = T[k:]
        F.update(F1)
        return [h + tail for h in H1], [g + tail for g in G1], F
    r = successive_resultant(P, T)
    if not r.is_zero:
        F.add(r)
        return [], [T], F

    Tn = T[-1]
    xn = Tn.top_position()
    rsc = regular_subresultant_chain(Tn, P, xn)
    H: list = []
    G: list = []
    if n == 1:
        S1 = rsc.S(1)
        H.append((S1,))
        Q = _quotient(Tn, S1, xn, F)
        _, G1, F1 = _wrsd((Q,), P, budget)
        G.extend(G1)
        F.update(F1)
        return H, G, F

    lower = T[:-1]
    H_prev, G0, F0 = _wrsd(lower, rsc.S(0), budget)
    G.extend(g + (Tn,) for g in G0)
    F.update(F0)
    i = 0
    last = rsc.upsilon + 1
    while H_prev:
        i += 1
        if i > last:
            raise AssertionError("regular subresultant split did not terminate")
        Ri = rsc.R(i)
        Si = rsc.S(i)
        H_i: list = []
        G_i: list = []
        for h in H_prev:
            Hh, Gh, Fh = _wrsd(h, Ri, budget)
            H_i.extend(Hh)
            G_i.extend(Gh)
            F.update(Fh)
        for g in dedupe_chains(G_i):
            H.append(g + (Si,))
            if i == last:
                continue
            Q = _quotient(Tn, Si, xn, F)
            if Q.degree(xn) > 0:
                _, G2, F2 = _wrsd(g + (Q,), P, budget)
                G.extend(G2)
                F.update(F2)
        H_prev = dedupe_chains(H_i)
    return H, G, F


def _quotient(Tn: Polynomial, S: Polynomial, xn: int, F: FactorSet) -> Polynomial:
    """Pseudo-quotient of T_n by S, reduced to its squarefree part without parameter content."""
    Q = pquo(Tn, S, xn)
    if Q.degree(xn) == 0:
        return Q
    Q2, removed = simplify_for_insertion(Q)
    F.update(removed)
    return Q2


def is_wrsd_valid(T, P: Polynomial, H, G, samples: int = 5, seed: int = 0, height: int = 50) -> bool:
    """Numeric check of the two covering identities at random stable parameter points."""
    from .oracle import check_wrsd_at_points

    return check_wrsd_at_points(T, P, H, G, samples=samples, seed=seed, height=height).passed


def chains_are_regular(result: WrsdResult) -> bool:
    from .chains import is_regular_chain

    return all(is_zero_dimensional(c) and is_regular_chain(c) for c in result.H + result.G)
