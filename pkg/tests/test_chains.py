from __future__ import annotations

import random

import pytest

from genreg.chains import (
    AscendingChain,
    NotTriangularError,
    RegularChainZD,
    TriangularSet,
    dedupe_chains,
    first_irregular_index,
    is_regular_chain,
    is_zero_dimensional,
    iterated_initial_resultant,
    normalize_chain,
    rank_set,
    specializes_well,
    specializes_well_by_rank,
)
from genreg.oracle import NumericPoly, sample_stable_points, sets_equal, solve_chain, solve_system
from genreg.polycore import Context, ParameterPoint, associates, divides, exact_div, specialize
from genreg.subres import successive_resultant

from generators import random_in_x, random_rational

C1 = Context(("u",), ("x1", "x2"))
C2 = Context(("u1", "u2"), ("x1", "x2"))
P, Q = C1.parse, C2.parse

EX1_C2 = [P("x1 - u"), P("(u-1)*x2^2 + x2 + u^2 - u")]
EX2_T2 = [Q("(u1^3 + u2^2)*x1^2 + 2*u1^2*x1 + u1"), Q("u2*x2 + u1*x1 + 1")]


def test_triangular_set_validation():
    with pytest.raises(NotTriangularError):
        TriangularSet(())
    with pytest.raises(NotTriangularError):
        TriangularSet((P("x2"), P("x1")))
    with pytest.raises(NotTriangularError):
        TriangularSet((P("x1"), P("x1^2 + u")))
    with pytest.raises(ValueError):
        AscendingChain("contradictory", (P("x1"),))


def test_regular_chain_examples():
    assert is_regular_chain(EX1_C2)
    assert not is_regular_chain([P("(x1-u)^2"), P("(x1-u)*(x2+1)")])
    assert first_irregular_index([P("(x1-u)^2"), P("(x1-u)*(x2+1)")]) == 1
    assert is_zero_dimensional(EX1_C2)
    assert not is_zero_dimensional([P("x2 - u")])
    with pytest.raises(ValueError):
        RegularChainZD.checked([P("(x1-u)^2"), P("(x1-u)*(x2+1)")])


def test_rank_sets():
    assert rank_set(EX1_C2) == (("x1", 1), ("x2", 2))
    assert rank_set(EX2_T2) == (("x1", 2), ("x2", 1))


def test_iterated_initial_resultant_examples():
    assert associates(iterated_initial_resultant(EX1_C2), P("u - 1"))
    assert iterated_initial_resultant([P("x1 - u"), P("x2 - u")]) == C1.one
    r = iterated_initial_resultant(EX2_T2)
    # every irreducible piece of r is one of u1, u2, u1^3 + u2^2
    for p in (Q("u2"), Q("u1^3 + u2^2")):
        assert divides(p, r)
    rest = exact_div(exact_div(r, Q("u2")), Q("u1^3 + u2^2"))
    while not rest.is_constant:
        for p in (Q("u1"), Q("u2"), Q("u1^3 + u2^2")):
            if divides(p, rest):
                rest = exact_div(rest, p)
                break
        else:
            pytest.fail(f"unexpected factor left: {rest}")


def test_successive_resultant_examples():
    T = [P("x1 - u"), P("x2 - u")]
    assert associates(successive_resultant(P("x1 + x2"), T), P("2*u"))
    assert successive_resultant(C1.one, T) == C1.one
    assert associates(successive_resultant(P("u - 1"), EX1_C2), P("u - 1"))


def test_specializes_well_examples():
    assert not specializes_well(EX1_C2, ParameterPoint((1,)))
    assert specializes_well(EX1_C2, ParameterPoint((2,)))
    free = [P("x1^2 - 2"), P("x2 - x1")]
    assert specializes_well(free, ParameterPoint((7,)))


def _random_chain(rng):
    """Zero-dimensional regular chain over Q[u] with degrees <= 2."""
    while True:
        t1 = random_in_x(rng, C1, 1, rng.randint(1, 2), [0], coeff_deg=1)
        t2 = random_in_x(rng, C1, 2, rng.randint(1, 2), [0, 1], coeff_deg=1)
        if is_regular_chain([t1, t2]):
            return [t1, t2]


def test_specialization_routes_agree():
    rng = random.Random(1)
    hits = 0
    for _ in range(40):
        T = _random_chain(rng)
        r = iterated_initial_resultant(T)
        # the roots of linear factors of r are exactly where specialization may fail
        pts = [ParameterPoint((random_rational(rng),)) for _ in range(3)]
        for f in [r]:
            lin = [c for c in range(-3, 4) if specialize(f, (c,)).is_zero]
            pts += [ParameterPoint((c,)) for c in lin]
        for a in pts:
            ok = specializes_well(T, a)  # cross_check raises on disagreement
            assert ok == specializes_well_by_rank(T, a)
            hits += not ok
    assert hits > 0


def test_stable_chains_have_solutions():
    # a regular chain has a nonempty variety at stable points, with full root count
    rng = random.Random(2)
    for _ in range(15):
        T = _random_chain(rng)
        r = iterated_initial_resultant(T)
        for a in sample_stable_points([r] if not r.is_constant else [], 2, seed=3, d=1, height=9):
            Ta = [specialize(t, a) for t in T]
            sols = solve_chain(Ta)
            assert len(sols) >= 1


def test_resultant_zero_iff_common_point():
    rng = random.Random(4)
    seen = {True: 0, False: 0}
    for k in range(30):
        T = _random_chain(rng)
        if k % 2:
            # a P vanishing on part of V(T): T_2 times something plus a multiple of T_1
            Pp = T[1] * random_in_x(rng, C1, 1, 1, [0]) + T[0] * random_in_x(rng, C1, 2, 1, [0])
        else:
            Pp = random_in_x(rng, C1, 2, 1, [0, 1], coeff_deg=1)
        res = successive_resultant(Pp, T)
        r = iterated_initial_resultant(T)
        avoid = [f for f in (r, res) if not f.is_zero and not f.is_constant]
        for a in sample_stable_points(avoid, 2, seed=k, d=1, height=9):
            sols = solve_chain([specialize(t, a) for t in T])
            pa = specialize(Pp, a)
            meets = any(NumericPoly(pa).residual(pt) <= 1e-6 for pt in sols)
            assert meets == res.is_zero
            seen[res.is_zero] += 1
    assert seen[True] and seen[False]


def test_normalize_chain_and_dedupe():
    T, removed = normalize_chain([P("(2*u + 2)*x1 - 4*u*(u+1)"), P("-x2 + x1")])
    assert T.polys == (P("x1 - 2*u"), P("x2 - x1"))
    assert [associates(c, P("u + 1")) for c in removed] == [True]
    same = [P("x1 - 2*u"), P("x2 - x1")]
    assert len(dedupe_chains([T, same, EX1_C2])) == 2


def test_solve_chain_matches_system():
    a = ParameterPoint((2,))
    Ta = [specialize(t, a) for t in EX1_C2]
    assert sets_equal(solve_chain(Ta), solve_system(Ta), 1e-6)
