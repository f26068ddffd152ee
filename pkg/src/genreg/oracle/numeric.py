"""Numeric solving of parameter-free systems and chains, and solution-set comparison.

Nothing computed here feeds back into exact results.  Exact arithmetic is used
for as long as it is cheap (squarefree parts, elimination resultants); floating
point enters only at root finding and back-substitution.

Tolerance tiers: root residual 1e-9, clustering 1e-8, membership 1e-6.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..polycore import Polynomial, exact_div, gcd, normalize, squarefree_decomposition
from ..subres import resultant
from . import kernels

ROOT_TOL = 1e-9
CLUSTER_TOL = 1e-8
MEMBER_TOL = 1e-6
# a k-fold root computed in doubles spreads like eps^(1/k); a cluster of k roots
# is merged when its diameter is within this factor of eps^(1/k)
MULTIROOT_SLACK = 100.0
_EPS = float(np.finfo(float).eps)


def _multiroot_radius(k: int, scale: float) -> float:
    return MULTIROOT_SLACK * _EPS ** (1.0 / k) * max(1.0, scale)


def _merge_multiple_roots(z) -> list[list[complex]]:
    """Group Aberth roots into plausible multiple roots.

    A perturbed k-fold root splits into k points about eps^(1/k) apart, so
    pairs alone never qualify; each root is tried with its k-1 nearest
    neighbours and the largest admissible cluster is taken first.
    """
    rest = [complex(r) for r in z]
    groups: list[list[complex]] = []
    while len(rest) > 1:
        best = None
        for i, r in enumerate(rest):
            order = sorted(range(len(rest)), key=lambda j: abs(rest[j] - r))
            for k in range(len(rest), 1, -1):
                if best is not None and k < best[0]:
                    break
                members = [rest[j] for j in order[:k]]
                diam = max(abs(a - b) for a in members for b in members)
                if diam <= _multiroot_radius(k, abs(np.mean(members))):
                    if best is None or (k, -diam) > (best[0], -best[1]):
                        best = (k, diam, order[:k])
                    break
        if best is None:
            break
        groups.append([rest[j] for j in best[2]])
        rest = [r for j, r in enumerate(rest) if j not in set(best[2])]
    return groups + [[r] for r in rest]


class ConditioningWarning(UserWarning):
    pass


class InitialVanishesError(ArithmeticError):
    pass


class CandidateExplosionError(RuntimeError):
    pass


class NotZeroDimensionalError(ValueError):
    pass


class RootFindingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class NumericSolutionSet:
    points: tuple
    tol: float = CLUSTER_TOL
    raw_count: int = field(default=0, compare=False)

    @classmethod
    def clustered(cls, points, tol: float = CLUSTER_TOL, raw_count: int = 0) -> NumericSolutionSet:
        return cls(tuple(cluster_points(points, tol)), tol, raw_count)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _scaled_dist(p, q) -> float:
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    if p.size == 0:
        return 0.0
    scale = max(1.0, float(np.max(np.abs(p))), float(np.max(np.abs(q))))
    return float(np.max(np.abs(p - q))) / scale


def cluster_points(points, tol: float) -> list:
    """Greedy single-linkage merge of points closer than tol (relative); centroids kept."""
    groups: list[list] = []
    for p in points:
        p = tuple(complex(c) for c in p)
        for g in groups:
            if any(_scaled_dist(p, q) <= tol for q in g):
                g.append(p)
                break
        else:
            groups.append([p])
    out = []
    for g in groups:
        arr = np.array(g, dtype=complex)
        out.append(tuple(complex(c) for c in arr.mean(axis=0)))
    out.sort(key=lambda p: tuple((round(c.real, 9), round(c.imag, 9)) for c in p))
    return out


def sets_equal(A, B, tol: float | None = None) -> bool:
    """Set equality within tol: greedy nearest-neighbour matching, Hungarian fallback."""
    if tol is None:
        tol = max(getattr(A, "tol", CLUSTER_TOL), getattr(B, "tol", CLUSTER_TOL))
    a = cluster_points(list(A), tol)
    b = cluster_points(list(B), tol)
    if len(a) != len(b):
        return False
    if not a:
        return True
    cost = np.array([[_scaled_dist(p, q) for q in b] for p in a])
    nearest = cost.argmin(axis=1)
    if len(set(nearest.tolist())) == len(a) and all(cost[i, nearest[i]] <= tol for i in range(len(a))):
        return True
    rows, cols = linear_sum_assignment(cost)
    return bool(np.all(cost[rows, cols] <= tol))


# --- univariate roots ------------------------------------------------------------


def _polish(coeffs: np.ndarray, z: complex, mult: int) -> complex:
    """Newton on the (mult-1)-th derivative, where a mult-fold root is simple."""
    c = coeffs
    for _ in range(mult - 1):
        c = np.polyder(c)
    dc = np.polyder(c)
    for _ in range(8):
        fz = np.polyval(c, z)
        dz = np.polyval(dc, z) if dc.size else 0
        if dz == 0 or fz == 0:
            break
        step = fz / dz
        z = z - step
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    return complex(z)


def numeric_roots(coeffs, use_jit: bool | None = None, simple: bool = False) -> list[tuple[complex, int]]:
    """Roots with multiplicities of a polynomial given by complex coefficients, highest first.

    ``simple=True`` promises squarefree input, so no roots are merged.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        raise ValueError("zero polynomial has no finite root set")
    c = c[nz[0] :]
    deg = c.size - 1
    if deg == 0:
        return []
    # exact zero roots
    tz = 0
    while c[-1 - tz] == 0:
        tz += 1
    out: list[tuple[complex, int]] = []
    if tz:
        out.append((0j, tz))
        c = c[: c.size - tz]
    if c.size > 1:
        c = c / c[0]
        z0 = kernels.initial_guesses(c)
        z, _ = kernels.aberth(c, z0, use_jit=use_jit)
        if c.size == 2:
            z = np.array([-c[1]])
        groups = [[complex(r)] for r in z] if simple else _merge_multiple_roots(z)
        for g in groups:
            k = len(g)
            r = complex(np.mean(g))
            r = _polish(c, r, k)
            out.append((r, k))
        _check_residuals(c, [r for r, _ in out if r != 0])
    return out


def _check_residuals(c: np.ndarray, roots) -> None:
    absc = np.abs(c)
    for r in roots:
        val = abs(np.polyval(c, r))
        mag = float(np.polyval(absc, abs(r)))
        if val > ROOT_TOL * max(1.0, mag):
            warnings.warn(
                f"root {r} has residual {val:.3e} (scale {mag:.3e})", ConditioningWarning, stacklevel=3
            )


def univariate_roots(f: Polynomial, with_multiplicity: bool = False):
    """All complex roots of an exact univariate polynomial, via its squarefree decomposition."""
    pos = f.positions()
    if len(pos) != 1:
        raise ValueError("univariate_roots expects a polynomial in exactly one indeterminate")
    v = pos[0]
    out = []
    for a, k in squarefree_decomposition(f):
        cs = a.coeff_list(v)
        coeffs = np.array([complex(Fraction(p.constant_value())) for p in reversed(cs)])
        for r, m in numeric_roots(coeffs, simple=True):
            out.append((r, m * k))
    if with_multiplicity:
        return out
    return [r for r, _ in out]


# --- numeric polynomial evaluation ----------------------------------------------


class NumericPoly:
    """Float image of an exact parameter-free polynomial, scaled so max |coeff| = 1."""

    def __init__(self, p: Polynomial, scale: bool = True):
        items = list(p.terms.items())
        self.nvars = p.ctx.nvars
        if items:
            self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), self.nvars)
            self.coeffs = np.array([complex(Fraction(c)) for _, c in items], dtype=np.complex128)
            if scale:
                self.coeffs = self.coeffs / np.max(np.abs(self.coeffs))
        else:
            self.exps = np.zeros((0, self.nvars), dtype=np.int64)
            self.coeffs = np.zeros(0, dtype=np.complex128)

    def eval(self, point) -> tuple[complex, float]:
        pt = np.zeros(self.nvars, dtype=np.complex128)
        pt[: len(point)] = point
        return kernels.eval_terms(self.coeffs, self.exps, pt)

    def residual(self, point) -> float:
        val, mag = self.eval(point)
        return abs(val) / max(1.0, mag)


def _univariate_at(coeff_polys: list[NumericPoly], point) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients (highest first) and their magnitudes after substituting a partial point."""
    vals = []
    mags = []
    for cp in reversed(coeff_polys):
        v, m = cp.eval(point)
        vals.append(v)
        mags.append(m)
    return np.array(vals, dtype=np.complex128), np.array(mags)


# --- chains -------------------------------------------------------------------------


def solve_chain(T, init_tol: float = 1e-9) -> NumericSolutionSet:
    """Back-substitution through a parameter-free zero-dimensional chain."""
    polys = list(getattr(T, "polys", T))
    if not polys:
        raise ValueError("empty chain")
    ctx = polys[0].ctx
    if ctx.d:
        raise ValueError("solve_chain expects a specialized (parameter-free) chain")
    partial: list[tuple[tuple, int]] = [((), 1)]
    for i, t in enumerate(polys):
        if t.top_position() != i:
            raise ValueError(f"chain member {i + 1} has main variable {t.top_position() + 1}")
        if i == 0:
            roots = univariate_roots(t, with_multiplicity=True)
            partial = [((r,), m) for r, m in roots]
            continue
        cps = [NumericPoly(c, scale=False) for c in t.coeff_list(i)]
        new = []
        for pt, mult in partial:
            cs, mags = _univariate_at(cps, pt)
            if abs(cs[0]) <= init_tol * max(1.0, mags[0]):
                raise InitialVanishesError(
                    f"initial of member {i + 1} vanishes at partial point {pt}: |I| = {abs(cs[0]):.3e}"
                )
            for r, m in numeric_roots(cs):
                new.append((pt + (r,), mult * m))
        partial = new
    raw = sum(m for _, m in partial)
    return NumericSolutionSet.clustered([p for p, _ in partial], CLUSTER_TOL, raw)


# --- systems ------------------------------------------------------------------------


def _combination(polys: list[Polynomial], trial: int) -> Polynomial:
    out = polys[0].ctx.zero
    for j, p in enumerate(polys):
        out = out + p.scale((j + 1) ** (trial + 1) + trial * j)
    return out


def _common_factor(A: list[Polynomial], v: int):
    """First pair (i, j) of A sharing a factor of positive degree in v, with that factor."""
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            h = gcd(A[i], A[j])
            if h.degree(v) > 0:
                return i, j, h
    return None


class _Solver:
    def __init__(self, cap: int):
        self.cap = cap
        self.candidates = 0

    def bump(self, k: int):
        self.candidates += k
        if self.candidates > self.cap:
            raise CandidateExplosionError(f"more than {self.cap} candidate tuples")

    def solve(self, P: list[Polynomial], nv: int) -> list[tuple]:
        """Common zeros of P in the first nv variables (P must not involve later ones)."""
        P = [normalize(p) for p in P if not p.is_zero]
        if any(p.is_constant for p in P):
            return []
        if nv == 0:
            return [()]
        v = nv - 1
        A = [p for p in P if p.degree(v) > 0]
        B = [p for p in P if p.degree(v) == 0]
        if not A:
            raise NotZeroDimensionalError(f"variable position {v} is unconstrained")
        split = _common_factor(A, v)
        if split is not None:
            i, j, h = split
            others = [p for k, p in enumerate(A) if k not in (i, j)] + B
            first = self.solve([h] + others, nv)
            second = self.solve([exact_div(A[i], h), exact_div(A[j], h)] + others, nv)
            return first + second
        if nv == 1:
            if len(A) > 1:
                return []  # pairwise coprime: no common root
            roots = univariate_roots(A[0])
            self.bump(len(roots))
            return [(r,) for r in roots]
        proj = list(B)
        if len(A) > 1:
            # pairwise coprime in v now, so none of these resultants vanishes
            A_sorted = sorted(A, key=lambda p: (p.degree(v), p.nterms))
            p0, rest = A_sorted[0], A_sorted[1:]
            proj += [resultant(p0, q, v) for q in rest]
            if len(rest) > 1:
                # a generic combination keeps the projection finite when the pairwise ones share factors
                for trial in range(6):
                    g = _combination(rest, trial)
                    if g.degree(v) == 0:
                        continue
                    r = resultant(p0, g, v)
                    if not r.is_zero:
                        proj.append(r)
                        break
        base = self.solve(proj, nv - 1)
        numA = [[NumericPoly(c, scale=False) for c in p.coeff_list(v)] for p in A]
        members = [NumericPoly(p) for p in A]
        out = []
        for pt in base:
            best = None
            for cps in numA:
                cs, mags = _univariate_at(cps, pt)
                big = max(1.0, float(mags.max()))
                k = 0
                while k < cs.size and abs(cs[k]) <= 1e-10 * big:
                    k += 1
                if k == cs.size:
                    continue
                cs = cs[k:]
                if cs.size == 1:
                    best = (0, cs)
                    break
                if best is None or cs.size < best[1].size:
                    best = (cs.size - 1, cs)
            if best is None:
                raise NotZeroDimensionalError(f"fibre over {pt} is the whole line")
            if best[0] == 0:
                continue
            roots = numeric_roots(best[1])
            self.bump(len(roots))
            for r, _ in roots:
                cand = pt + (r,)
                if all(m.residual(cand) <= MEMBER_TOL for m in members):
                    out.append(cand)
        return cluster_points(out, CLUSTER_TOL)


def _shear(n: int, trial: int) -> list[list[int]]:
    """Unit upper-triangular integer matrix; x = M y."""
    rng = random.Random(7919 * trial)
    return [[1 if i == j else (rng.randint(1, 5) if j > i else 0) for j in range(n)] for i in range(n)]


def _compose(p: Polynomial, images: list[Polynomial]) -> Polynomial:
    ctx = p.ctx
    powers: dict = {}
    out = ctx.zero
    for e, c in p.terms.items():
        t = ctx.const(c)
        for i, k in enumerate(e):
            if k:
                if (i, k) not in powers:
                    powers[(i, k)] = images[i] ** k
                t = t * powers[(i, k)]
        out = out + t
    return out


def solve_system(P, cap: int = 10_000) -> NumericSolutionSet:
    """Numeric zeros of a parameter-free zero-dimensional system by resultant elimination.

    Projections can pick up spurious curves where all leading coefficients
    vanish; if that happens the system is retried after a random unimodular
    change of coordinates, which puts it in general position.
    """
    polys = [p for p in P if not p.is_zero]
    if not polys:
        raise NotZeroDimensionalError("empty system")
    ctx = polys[0].ctx
    if ctx.d:
        raise ValueError("solve_system expects a specialized (parameter-free) system")
    n = ctx.n
    try:
        pts = _Solver(cap).solve(polys, n)
    except NotZeroDimensionalError as exc:
        first = exc
        for trial in range(1, 5):
            M = _shear(n, trial)
            ys = ctx.gens()
            images = [sum((ys[j].scale(M[i][j]) for j in range(n) if M[i][j]), ctx.zero) for i in range(n)]
            try:
                ypts = _Solver(cap).solve([_compose(p, images) for p in polys], n)
            except NotZeroDimensionalError:
                continue
            pts = [tuple(sum(M[i][j] * y[j] for j in range(n)) for i in range(n)) for y in ypts]
            break
        else:
            raise first
    members = [NumericPoly(p) for p in polys]
    pts = [p for p in pts if all(m.residual(p) <= MEMBER_TOL for m in members)]
    return NumericSolutionSet.clustered(pts, CLUSTER_TOL)


def filter_points(points, keep_zero: list[Polynomial] = (), keep_nonzero: list[Polynomial] = (), tol: float = MEMBER_TOL):
    """Points where every keep_zero poly vanishes and every keep_nonzero poly does not."""
    zs = [NumericPoly(p) for p in keep_zero]
    nzs = [NumericPoly(p) for p in keep_nonzero]
    out = []
    for pt in points:
        if all(z.residual(pt) <= tol for z in zs) and all(nz.residual(pt) > tol for nz in nzs):
            out.append(pt)
    return out
