"""Verification campaigns: compare exact decompositions with direct numeric solving."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chains import iterated_initial_resultant, rank_set, specializes_well
from ..polycore import FactorSet, ParameterPoint, specialize
from ..subres import successive_resultant
from .numeric import (
    MEMBER_TOL,
    filter_points,
    sets_equal,
    solve_chain,
    solve_system,
)
from .sampling import sample_stable_points


@dataclass
class PointCheck:
    point: ParameterPoint
    checks: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())

    def to_json(self) -> dict:
        out = {"point": [str(c) for c in self.point.coords], "checks": dict(self.checks), "passed": self.passed}
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class CampaignReport:
    seed: int
    points: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "samples": len(self.points),
            "passed": self.passed,
            "points": [p.to_json() for p in self.points],
        }


def union_of_chain_solutions(chains, a: ParameterPoint) -> list:
    pts = []
    for T in chains:
        Ta = [specialize(p, a) for p in T]
        pts.extend(solve_chain(Ta).points)
    return pts


def _rank_preserved(T, a) -> bool:
    Ta = [specialize(p, a) for p in T]
    if any(q.is_zero for q in Ta):
        return False
    return rank_set(Ta) == rank_set(T)


def check_decomposition(P, chains, factors, samples: int = 5, seed: int = 0, height: int = 50) -> CampaignReport:
    """Stability contract at stable points: same solutions, chains specialize well, ranks kept."""
    P = list(P)
    ctx = P[0].ctx
    report = CampaignReport(seed)
    for a in sample_stable_points(list(factors), samples, seed=seed, d=ctx.d, height=height):
        pc = PointCheck(a)
        try:
            pc.checks["specializes_well"] = all(specializes_well(T, a) for T in chains)
            pc.checks["rank_preserved"] = all(_rank_preserved(T, a) for T in chains)
            direct = solve_system([specialize(p, a) for p in P])
            via = union_of_chain_solutions(chains, a)
            pc.checks["solutions_match"] = sets_equal(direct, via, MEMBER_TOL)
        except Exception as exc:  # a referee failure is a failed check, not a crash
            pc.error = f"{type(exc).__name__}: {exc}"
        report.points.append(pc)
    return report


def wrsd_avoid_set(T, P, H, G) -> FactorSet:
    """Parameter polynomials whose zeros make a numeric comparison meaningless."""
    fs = FactorSet()
    for C in [T, *H, *G]:
        r = iterated_initial_resultant(C)
        if not r.is_zero:
            fs.add(r)
    for C in [T, *G]:
        r = successive_resultant(P, C)
        if not r.is_zero and r.cls == 0:
            fs.add(r)
    return fs


def check_wrsd_at_points(T, P, H, G, samples: int = 5, seed: int = 0, height: int = 50) -> CampaignReport:
    """Both covering identities of a WRSD at random stable points."""
    T = list(getattr(T, "polys", T))
    ctx = T[0].ctx
    H = [list(getattr(h, "polys", h)) for h in H]
    G = [list(getattr(g, "polys", g)) for g in G]
    avoid = wrsd_avoid_set(T, P, H, G)
    report = CampaignReport(seed)
    for a in sample_stable_points(list(avoid), samples, seed=seed, d=ctx.d, height=height):
        pc = PointCheck(a)
        try:
            Ta = [specialize(p, a) for p in T]
            Pa = specialize(P, a)
            pts = solve_chain(Ta).points
            on = filter_points(pts, keep_zero=[Pa])
            off = filter_points(pts, keep_nonzero=[Pa])
            pc.checks["zero_part"] = sets_equal(on, union_of_chain_solutions(H, a), MEMBER_TOL)
            pc.checks["nonzero_part"] = sets_equal(off, union_of_chain_solutions(G, a), MEMBER_TOL)
            pc.checks["specializes_well"] = all(specializes_well(C, a) for C in H + G)
        except Exception as exc:
            pc.error = f"{type(exc).__name__}: {exc}"
        report.points.append(pc)
    return report
