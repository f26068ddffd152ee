from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genreg.polycore import Context, ParameterPoint, associates, specialize
from genreg.subres import (
    regular_indices,
    regular_subresultant_chain,
    resultant,
    subresultant_chain,
    successive_resultant,
)

from generators import random_in_x
from lemmas import LEMMA2_CTX, lemma2_check, lemma2_final_clause, lemma2_pair, run_lemma2, run_lemma3
from oracles import successive_resultant_oracle, sylvester_resultant, sylvester_subresultant

C1 = Context(("u",), ("x1", "x2"))
P = C1.parse


def test_resultant_examples():
    assert resultant(P("x1^2 - u"), P("x1 - 1"), "x1") == P("1 - u")
    assert resultant(P("x1^2 + 1"), P("x1"), "x1") == P("1")


def test_chain_for_linear_divisor():
    f, g = P("x1^3 + u*x1 + 1"), P("x1 - u")
    ch = subresultant_chain(f, g, "x1")
    assert ch.mu == 2
    assert ch.S[3] == f and ch.S[2] == g
    assert ch.S[1] == g
    # the resultant is f evaluated at the root of g, up to sign
    assert associates(ch.S[0], P("u^3 + u^2 + 1"))


def test_chain_requires_degrees():
    with pytest.raises(ValueError):
        subresultant_chain(P("x1"), P("x1^2"), "x1")
    with pytest.raises(ValueError):
        subresultant_chain(P("x1^2"), P("x1^2 + 1"), "x1")
    with pytest.raises(ValueError):
        subresultant_chain(P("x1^2"), P("u"), "x1")


def _pair(rng, ctx, pos, coeff_positions, max_m=4, equal=False):
    l = rng.randint(1, max_m - 1 if not equal else max_m)
    m = l if equal else rng.randint(l + 1, max_m)
    f = random_in_x(rng, ctx, pos, m, coeff_positions, coeff_deg=1, nterms=2)
    g = random_in_x(rng, ctx, pos, l, coeff_positions, coeff_deg=1, nterms=2)
    return f, g


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_chain_matches_determinants(seed, equal):
    rng = random.Random(seed)
    f, g = _pair(rng, C1, 2, [0, 1], equal=equal)
    ch = subresultant_chain(f, g, 2, allow_equal_degrees=equal)
    l = g.degree(2)
    for j in range(ch.mu):
        if j < l:
            assert ch.S[j] == sylvester_subresultant(f, g, 2, j), j


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_resultant_matches_sylvester(seed):
    rng = random.Random(seed)
    m, l = rng.randint(1, 4), rng.randint(1, 4)
    f = random_in_x(rng, C1, 1, m, [0, 2], coeff_deg=1)
    g = random_in_x(rng, C1, 1, l, [0, 2], coeff_deg=1)
    assert resultant(f, g, 1) == sylvester_resultant(f, g, 1)


def test_successive_resultant_against_oracle():
    rng = random.Random(3)
    T = [P("x1^2 - u"), P("(x1 + 1)*x2^2 + u*x2 - x1")]
    for _ in range(15):
        f = random_in_x(rng, C1, 2, rng.randint(1, 3), [0, 1], coeff_deg=2)
        assert successive_resultant(f, T) == successive_resultant_oracle(f, T)


def test_regular_indices_and_last_entry():
    rng = random.Random(11)
    for _ in range(30):
        f, g = _pair(rng, C1, 2, [0, 1])
        rc = regular_subresultant_chain(f, g, 2)
        assert rc.indices[0] == 0
        for i in range(1, rc.upsilon + 1):
            s = rc.S(i)
            assert s.degree(2) == rc.indices[i]
            assert rc.R(i) == s.leading_coeff(2)
        assert rc.S(rc.upsilon + 1) == f
        # S at index mu is g, which is regular exactly when deg g = mu
        ch = rc.base
        if g.degree(2) == ch.mu:
            assert rc.indices[-1] == ch.mu
        # the top regular subresultant below g is a power of lc(g) times g
        l = g.degree(2)
        if l < ch.mu:
            lc = g.leading_coeff(2)
            assert ch.S[l] == lc ** (ch.mu - l) * g


def test_regular_indices_skip_defective_entries():
    f = P("x1^4 + 1")
    g = P("x1^2")
    rc = regular_indices(subresultant_chain(f, g, "x1"))
    assert rc.indices == (0, 2)


# --- specialization table ---------------------------------------------------------


@pytest.mark.parametrize("case", [1, 2, 3, 4])
def test_specialization_case(case):
    rng = random.Random(case)
    seen = 0
    for _ in range(15):
        f, g, a = lemma2_pair(rng, case)
        got, ok = lemma2_check(f, g, a)
        assert ok, (f, g, a)
        seen += got == case
    assert seen >= 5


def test_specialization_table_small_run():
    hits, failures = run_lemma2(60, seed=5)
    assert not failures
    assert all(hits[c] >= 5 for c in (1, 2, 3, 4)), hits


def test_specialization_final_clause():
    rng = random.Random(17)
    t = LEMMA2_CTX.gen("u") - 2
    premise = 0
    for _ in range(40):
        f = random_in_x(rng, LEMMA2_CTX, 1, rng.randint(2, 3), [0], coeff_deg=1)
        g = random_in_x(rng, LEMMA2_CTX, 1, rng.randint(1, f.degree(1) - 1), [0], coeff_deg=1) * t
        a = ParameterPoint((2,))
        if specialize(f.leading_coeff(1), a).is_zero:
            continue
        claim = lemma2_final_clause(f, g, a)
        if claim is not None:
            premise += 1
            assert claim
    assert premise >= 20


# --- split identities -------------------------------------------------------------


def test_split_identities_small_run():
    checked, failures = run_lemma3(8, points=2, seed=1)
    assert checked == 16
    assert not failures, failures[:2]
