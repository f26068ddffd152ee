"""Wu's method: basic sets, characteristic sets and the branch decomposition.

Remainders are replaced by their squarefree part with parameter-only content
removed before they join the working set.  Removing a factor c(U) is harmless
over K(U) but not under specialization, so every removed content is reported
back (``removed``) and ends up in the RDU factor set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import AscendingChain
from .polycore import (
    FactorSet,
    Polynomial,
    exact_div,
    initial,
    normalize,
    sprem,
    squarefree_part,
)
from .polycore.factor import gcd


def poly_rank(p: Polynomial) -> tuple[int, int]:
    k = p.cls
    if k == 0:
        return (0, 0)
    return (k, p.degree(p.top_position()))


def _selection_key(p: Polynomial):
    return (poly_rank(p), p.nterms, str(p))


def _reduced_wrt(p: Polynomial, chain: list[Polynomial]) -> bool:
    for c in chain:
        v = c.top_position()
        if p.degree(v) >= c.degree(v):
            return False
    return True


def basic_set(P) -> AscendingChain:
    """Minimal-rank ascending chain inside P (Ritt ordering, deterministic tie-breaks)."""
    cands = sorted((p for p in P if not p.is_zero), key=_selection_key)
    if not cands:
        raise ValueError("basic set of an empty system")
    if cands[0].cls == 0:
        return AscendingChain("contradictory", (cands[0],))
    chain = [cands[0]]
    for p in cands[1:]:
        if p.cls > chain[-1].cls and _reduced_wrt(p, chain):
            chain.append(p)
    return AscendingChain("non-contradictory", tuple(chain))


def chain_rank(C: AscendingChain) -> tuple:
    return tuple(poly_rank(p) for p in C.polys)


def rank_less(A: AscendingChain, B: AscendingChain) -> bool:
    """Ritt order on ascending chains: first differing rank decides; a proper extension is lower."""
    ra, rb = chain_rank(A), chain_rank(B)
    for x, y in zip(ra, rb):
        if x != y:
            return x < y  # lower class first, then lower degree
    return len(ra) > len(rb)


def simplify_for_insertion(r: Polynomial) -> tuple[Polynomial, list[Polynomial]]:
    """Squarefree part of r with its parameter-only content split off.

    Class-0 polynomials are returned normalized as they are: they are the
    contradictory elements themselves.
    """
    r = normalize(r)
    if r.cls == 0:
        return r, []
    ctx = r.ctx
    d = ctx.d
    pcont = ctx.one
    if d:
        # gcd of the coefficients w.r.t. all variables x: lives in K[U]
        coeffs: dict = {}
        for e, c in r.terms.items():
            coeffs.setdefault(e[d:], {})[e[:d] + (0,) * ctx.n] = c
        parts = sorted((Polynomial(ctx, t) for t in coeffs.values()), key=lambda p: p.nterms)
        g = normalize(parts[0])
        for q in parts[1:]:
            if g.is_constant:
                break
            g = gcd(g, q)
        if not g.is_constant:
            pcont = g
            r = exact_div(r, g)
    removed = [] if pcont.is_constant else [pcont]
    return normalize(squarefree_part(r)), removed


@dataclass
class CharsetResult:
    chain: AscendingChain
    working_set: list
    removed: list


def characteristic_set(P) -> CharsetResult:
    """Classic Wu iteration: basic set, reduce everything, add remainders, repeat."""
    work = []
    seen = set()
    for p in P:
        if not p.is_zero and p not in seen:
            seen.add(p)
            work.append(p)
    removed: list = []
    prev = None
    while True:
        B = basic_set(work)
        if prev is not None and not rank_less(B, prev):
            raise AssertionError(f"characteristic set rank did not decrease: {B} after {prev}")
        if B.contradictory:
            return CharsetResult(B, work, removed)
        chain = list(B.polys)
        new = []
        for p in work:
            if p in B.polys:
                continue
            r = sprem(p, chain)
            if r.is_zero:
                continue
            r2, rem = simplify_for_insertion(r)
            removed.extend(rem)
            if r2 not in seen:
                seen.add(r2)
                new.append(r2)
        if not new:
            return CharsetResult(B, work, removed)
        work = work + new
        prev = B


@dataclass
class WuBranch:
    chain: AscendingChain
    system: tuple  # the branch system the chain was computed from
    path: tuple  # initials split on to reach this branch, as text


@dataclass
class WuDecomposition:
    source: tuple
    branches: list = field(default_factory=list)
    removed: FactorSet = field(default_factory=FactorSet)

    @property
    def chains(self) -> list[AscendingChain]:
        return [b.chain for b in self.branches]


def wu_decompose(P) -> WuDecomposition:
    """Theorem-1 recursion: V(P) = V(C \\ I_C) united with V(P + C + {I_i}) over the initials."""
    source = tuple(p for p in P if not p.is_zero)
    if not source:
        raise ValueError("empty system")
    out = WuDecomposition(source)
    seen_chains = set()
    seen_systems = set()

    def visit(system: tuple, path: tuple):
        skey = frozenset(system)
        if skey in seen_systems:
            return
        seen_systems.add(skey)
        cs = characteristic_set(system)
        out.removed.update(cs.removed)
        C = cs.chain
        if C.key() not in seen_chains:
            seen_chains.add(C.key())
            out.branches.append(WuBranch(C, system, path))
        if C.contradictory:
            return
        for c in C.polys:
            I = initial(c)
            if I.is_constant:
                continue
            I2, rem = simplify_for_insertion(I)
            out.removed.update(rem)
            if I2.is_constant:
                continue
            branch = list(system)
            for q in C.polys + (I2,):
                if q not in branch:
                    branch.append(q)
            visit(tuple(branch), path + (str(I2),))

    visit(source, ())
    return out


def is_generic_zero_dimensional(W: WuDecomposition) -> bool:
    return not nongeneric_chains(W)


def nongeneric_chains(W: WuDecomposition) -> list[AscendingChain]:
    bad = []
    for C in W.chains:
        if C.contradictory:
            continue
        n = C.polys[0].ctx.n
        if len(C.polys) != n:
            bad.append(C)
    return bad
