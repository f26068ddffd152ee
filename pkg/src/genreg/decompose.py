"""Wu chains to regular chains, and the generic regular decomposition with its RDU factors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import (
    AscendingChain,
    RegularChainZD,
    TriangularSet,
    chain_sort_key,
    first_irregular_index,
    is_zero_dimensional,
    iterated_initial_resultant,
    normalize_chain,
)
from .polycore import FactorSet, Polynomial, initial
from .wrsd import wrsd
from .wu import WuDecomposition, nongeneric_chains, wu_decompose


class NonGenericSystemError(ValueError):
    def __init__(self, chain: AscendingChain):
        self.chain = chain
        n = chain.polys[0].ctx.n
        ranks = ", ".join(f"{p.ctx.variables[p.cls - 1]}" for p in chain.polys)
        super().__init__(
            f"system is not generic zero-dimensional: Wu chain {chain} has main variables "
            f"[{ranks}] but {n} variables are declared"
        )


@dataclass
class Decomposition:
    chains: list
    rdu_factors: FactorSet
    provenance: list = field(default_factory=list)  # parallel to chains

    def factor_list(self) -> list[Polynomial]:
        return list(self.rdu_factors)


def zd_to_rc(T, _trace: tuple = (), _min_k: int = -1) -> tuple[list, FactorSet, list]:
    """Split a full-rank triangular set into zero-dimensional regular chains.

    Returns (chains, factor set, per-chain traces).
    """
    polys = tuple(getattr(T, "polys", T))
    TriangularSet(polys)
    if not is_zero_dimensional(polys):
        raise ValueError(f"zd_to_rc needs main variables x1..xn, got {TriangularSet(polys)}")
    bad = first_irregular_index(polys)
    if bad is None:
        fs = FactorSet([iterated_initial_resultant(polys)])
        return [polys], fs, [_trace]
    k = bad  # T_1..T_k regular (k members), T_{k+1} is not
    if k <= _min_k:
        raise AssertionError("regular prefix did not grow between recursive calls")
    W = wrsd(polys[:k], initial(polys[k]))
    F = FactorSet()
    F.update(W.F)
    if not W.G:
        return [], F, []
    chains: list = []
    traces: list = []
    for g in W.G:
        step = f"split at member {k + 1} by its initial"
        c2, f2, t2 = zd_to_rc(tuple(g.polys) + polys[k:], _trace + (step,), k)
        chains.extend(c2)
        F.update(f2)
        traces.extend(t2)
    return chains, F, traces


def _finish(pairs, F: FactorSet):
    """Normalize chains, fold removed contents into F, dedupe, sort canonically."""
    out = {}
    for T, trace in pairs:
        N, removed = normalize_chain(T)
        F.update(removed)
        F.add(iterated_initial_resultant(N))
        out.setdefault(N.key(), (N, trace))
    items = sorted(out.values(), key=lambda it: chain_sort_key(it[0]))
    return [it[0] for it in items], [it[1] for it in items]


def _check_generic(W: WuDecomposition) -> None:
    bad = nongeneric_chains(W)
    if bad:
        raise NonGenericSystemError(bad[0])


def rdu_for_zd(P) -> Decomposition:
    """Generic regular decomposition of a generic zero-dimensional system plus its RDU factors."""
    P = [p for p in P if not p.is_zero]
    W = wu_decompose(P)
    _check_generic(W)
    F = FactorSet()
    F.update(W.removed)
    pairs = []
    for idx, br in enumerate(W.branches):
        C = br.chain
        if C.contradictory:
            F.add(C.polys[0])
            continue
        chains, f, traces = zd_to_rc(C.polys, (f"wu chain {idx + 1}",) + tuple(f"branch on {s}" for s in br.path))
        F.update(f)
        pairs.extend(zip(chains, traces))
    chains, prov = _finish(pairs, F)
    return Decomposition([RegularChainZD(c.polys) for c in chains], F, prov)


def nonredundant_wu(P) -> tuple[list[AscendingChain], FactorSet]:
    """Wu chains whose regular-chain conversion is nonempty, with the same factor set."""
    P = [p for p in P if not p.is_zero]
    W = wu_decompose(P)
    _check_generic(W)
    F = FactorSet()
    F.update(W.removed)
    keep = []
    pairs = []
    for br in W.branches:
        C = br.chain
        if C.contradictory:
            F.add(C.polys[0])
            continue
        chains, f, traces = zd_to_rc(C.polys)
        F.update(f)
        if chains:
            keep.append(C)
            pairs.extend(zip(chains, traces))
    _finish(pairs, F)
    return keep, F
