"""Triangular sets, ascending chains and zero-dimensional regular chains."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .polycore import (
    Polynomial,
    canonical_key,
    content,
    exact_div,
    initial,
    normalize,
    specialize,
)
from .polycore.textio import format_recursive
from .subres import successive_resultant


class NotTriangularError(ValueError):
    pass


@dataclass(frozen=True)
class TriangularSet:
    polys: tuple

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise NotTriangularError("empty triangular set")
        prev = 0
        for p in polys:
            if p.is_zero:
                raise NotTriangularError("zero polynomial in a triangular set")
            k = p.cls
            if k <= prev:
                raise NotTriangularError(f"classes not strictly increasing at {p}")
            prev = k

    @property
    def ctx(self):
        return self.polys[0].ctx

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def classes(self) -> tuple[int, ...]:
        return tuple(p.cls for p in self.polys)

    @property
    def initials(self) -> tuple:
        return tuple(initial(p) for p in self.polys)

    def prefix(self, k: int) -> TriangularSet:
        return TriangularSet(self.polys[:k])

    def strings(self) -> list[str]:
        return [str(p) for p in self.polys]

    def key(self):
        return tuple(str(p) for p in self.polys)

    def __str__(self):
        return "{" + ", ".join(format_recursive(p) for p in self.polys) + "}"


class RegularChainZD(TriangularSet):
    """A zero-dimensional regular chain: mvar(T_i) = x_i for i = 1..n, regular."""

    @classmethod
    def checked(cls, polys: Iterable[Polynomial]) -> RegularChainZD:
        T = cls(tuple(polys))
        if not is_zero_dimensional(T):
            raise ValueError(f"{T} is not zero-dimensional")
        if not is_regular_chain(T):
            raise ValueError(f"{T} is not a regular chain")
        return T


@dataclass(frozen=True)
class AscendingChain:
    kind: str  # "contradictory" | "non-contradictory"
    polys: tuple

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if self.kind == "contradictory":
            if len(self.polys) != 1 or self.polys[0].is_zero or self.polys[0].cls != 0:
                raise ValueError("a contradictory chain is one nonzero class-0 polynomial")
        elif self.kind == "non-contradictory":
            TriangularSet(self.polys)
        else:
            raise ValueError(f"unknown chain kind {self.kind!r}")

    @property
    def contradictory(self) -> bool:
        return self.kind == "contradictory"

    def triangular(self) -> TriangularSet:
        return TriangularSet(self.polys)

    def key(self):
        return (self.kind, tuple(str(p) for p in self.polys))

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __str__(self):
        return "{" + ", ".join(format_recursive(p) for p in self.polys) + "}"


def _polys(T) -> Sequence[Polynomial]:
    return T.polys if hasattr(T, "polys") else tuple(T)


def is_zero_dimensional(T) -> bool:
    polys = _polys(T)
    n = polys[0].ctx.n
    return len(polys) == n and all(p.cls == i + 1 for i, p in enumerate(polys))


def first_irregular_index(T) -> int | None:
    """Smallest 0-based i with res(I(T_i), T_{<i}) = 0, or None if T is regular."""
    polys = _polys(T)
    for i, p in enumerate(polys):
        r = successive_resultant(initial(p), polys[:i]) if i else initial(p)
        if r.is_zero:
            return i
    return None


def is_regular_chain(T) -> bool:
    polys = _polys(T)
    try:
        TriangularSet(polys)
    except NotTriangularError:
        return False
    return first_irregular_index(polys) is None


def rank_set(T) -> tuple[tuple[str, int], ...]:
    """Ranks (main variable, degree) in chain order."""
    out = []
    for p in _polys(T):
        v = p.top_position()
        out.append((p.ctx.names[v], p.degree(v)))
    return tuple(out)


def initials_product(T) -> Polynomial:
    polys = _polys(T)
    out = polys[0].ctx.one
    for p in polys:
        out = out * initial(p)
    return out


def iterated_initial_resultant(T) -> Polynomial:
    """res(I_T, T) computed factor by factor: the product of res(I(T_i), T_{<i}).

    Resultants are multiplicative in the first argument, so this has the same
    zero set as the resultant of the full initial product, with smaller
    intermediate degrees.
    """
    polys = _polys(T)
    out = polys[0].ctx.one
    for i, p in enumerate(polys):
        r = successive_resultant(initial(p), polys[:i]) if i else initial(p)
        out = out * r
    if out.cls != 0:
        raise ValueError(f"res(I_T, T) involves variables; {T} is not zero-dimensional")
    return out


def _specialized(T, a) -> tuple:
    return tuple(specialize(p, a) for p in _polys(T))


def specializes_well_by_rank(T, a) -> bool:
    """Route via the definition: T(a) is a regular chain with rank(T(a)) = rank(T)."""
    polys = _polys(T)
    Ta = _specialized(polys, a)
    for p, q in zip(polys, Ta):
        if q.is_zero:
            return False
        v = p.top_position() - p.ctx.d
        if q.top_position() != v or q.degree(v) != p.degree(p.top_position()):
            return False
    return is_regular_chain(Ta)


def specializes_well(T, a, cross_check: bool = True) -> bool:
    """Whether res(I_T, T) does not vanish at a; optionally cross-checked against the rank route."""
    r = iterated_initial_resultant(T)
    ok = not specialize(r, a).is_zero
    if cross_check:
        other = specializes_well_by_rank(T, a)
        if other != ok:
            raise AssertionError(f"specialization criteria disagree for {T} at {a}")
    return ok


def normalize_chain(T) -> tuple[RegularChainZD, list[Polynomial]]:
    """Make each member primitive w.r.t. its main variable with positive leading coefficient.

    Returns the new chain and the removed parameter-only contents (the caller
    adds them to the factor set).
    """
    out = []
    removed = []
    for p in _polys(T):
        v = p.top_position()
        c = content(p, v)
        q = p if c.is_constant else exact_div(p, c)
        if not c.is_constant and c.cls == 0:
            removed.append(c)
        out.append(normalize(q))
    return RegularChainZD(tuple(out)), removed


def chain_sort_key(T):
    return tuple(canonical_key(p) for p in _polys(T))


def dedupe_chains(chains: Iterable) -> list:
    seen = {}
    for T in chains:
        seen.setdefault(tuple(str(p) for p in _polys(T)), T)
    return [seen[k] for k in sorted(seen, key=lambda k: chain_sort_key(seen[k]))]
