from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genreg.polycore import (
    Context,
    ContextMismatchError,
    FactorSet,
    ParameterPoint,
    ParseError,
    Polynomial,
    associates,
    cls,
    deg,
    divides,
    exact_div,
    format_polynomial,
    format_recursive,
    gcd,
    initial,
    is_reduced,
    mvar,
    normalize,
    parse_polynomial,
    pquo,
    prem,
    pseudo_divide,
    rank,
    specialize,
    sprem,
    squarefree_decomposition,
    squarefree_part,
    squarefree_primitive_factors,
)

C1 = Context(("u",), ("x1", "x2"))
C2 = Context(("u1", "u2"), ("x1", "x2"))
P = C1.parse
Q = C2.parse


# --- arithmetic ---------------------------------------------------------------


def test_difference_of_squares():
    assert P("(x1+u)*(x1-u)") == P("x1^2 - u^2")


def test_additive_identity():
    p = P("x1*x2 - u")
    assert p + C1.zero == p
    assert p - p == C1.zero
    assert (p - p).terms == {}


def test_example_product_expansion():
    assert P("(x1-u)*(x2+1)") == P("x1*x2 + x1 - u*x2 - u")


def test_rational_coefficients_and_scalar_division():
    p = P("x1/2 + 1/3")
    assert p.terms[(0, 1, 0)] == Fraction(1, 2)
    assert (p * 6) == P("3*x1 + 2")
    assert p / Fraction(1, 2) == P("x1 + 2/3")


def test_integral_coefficients_are_ints():
    p = P("2/2*x1 + 4/2")
    assert all(type(c) is int for c in p.terms.values())


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        P("x1") + Q("x1")


def test_context_validation():
    with pytest.raises(ValueError):
        Context(("u",), ())
    with pytest.raises(ValueError):
        Context(("x",), ("x",))


# --- structure ------------------------------------------------------------------


def test_degree_examples():
    assert deg(Q("u1*x2^2 + x1^2"), "x2") == 2
    assert deg(C1.const(7), "x1") == 0
    assert deg(P("(x1-u)^2"), "x1") == 2


def test_class_examples():
    assert cls(P("u - 1")) == 0
    assert cls(P("x1 - u")) == 1
    assert cls(P("(u-1)*x2^2 + x2 + u^2 - u")) == 2


def test_mvar_initial_rank():
    f = P("(u-1)*x2^2 + x2 + u^2 - u")
    assert mvar(f) == "x2"
    assert initial(f) == P("u - 1")
    assert rank(P("x1 - u")) == ("x1", 1)
    assert initial(Q("(u1^2+u2^3)*x1^2 + 2*u1^2*x1 + u1")) == Q("u1^2 + u2^3")


def test_class_zero_has_no_mvar():
    with pytest.raises(ValueError):
        mvar(P("u - 1"))


# --- pseudo-division --------------------------------------------------------------


def test_prem_examples():
    assert prem(P("x1 + x2"), P("x2"), "x2") == P("x1")
    f = P("x1")
    assert prem(f, P("x2^2 + 1"), "x2") == f
    assert pquo(P("x1^2 - u^2"), P("x1 - u"), "x1") == P("x1 + u")


def test_sprem_examples():
    T = [P("x1^2"), P("x2")]
    assert sprem(P("x1 + x2"), T) == P("x1")
    C2chain = [P("x1 - u"), P("(u-1)*x2^2 + x2 + u^2 - u")]
    for t in C2chain:
        assert sprem(t, C2chain).is_zero
    assert sprem(P("(x1-u)*(x2+1)"), C2chain).is_zero


def test_pseudo_division_needs_positive_degree():
    with pytest.raises(ValueError):
        prem(P("x1"), P("u"), "x1")


def _random_poly(rng, ctx, deg_budget=3, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = [0] * ctx.nvars
        for _ in range(rng.randint(0, deg_budget)):
            e[rng.randrange(ctx.nvars)] += 1
        terms[tuple(e)] = rng.randint(-6, 6)
    return Polynomial.from_terms(ctx, terms)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_pseudo_division_identity(seed):
    rng = random.Random(seed)
    f = _random_poly(rng, C1, 4, 5)
    p = _random_poly(rng, C1, 3, 4)
    x = rng.choice([1, 2])
    if p.degree(x) == 0:
        p = p + C1.gens()[x] * P("u + 2")
    q, r, k = pseudo_divide(f, p, x)
    assert p.leading_coeff(x) ** k * f == q * p + r
    assert r.degree(x) < p.degree(x)
    assert 0 <= k <= max(f.degree(x) - p.degree(x) + 1, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_sprem_is_reduced(seed):
    rng = random.Random(seed)
    T = [P("x1^2 + u*x1 - 1") + _random_poly(rng, C1, 1, 2).subs({"x1": 0, "x2": 0}),
         P("(x1 + u)*x2^2 + x1*x2 + 1")]
    f = _random_poly(rng, C1, 5, 6)
    r = sprem(f, T)
    assert is_reduced(r, T)


# --- specialization -------------------------------------------------------------


def test_specialize_examples():
    assert specialize(P("u - 1"), ParameterPoint((1,))).is_zero
    s = specialize(P("x1 - u"), ParameterPoint((3,)))
    assert s == s.ctx.parse("x1 - 3")
    assert s.ctx.d == 0
    s = specialize(P("(u-1)*x2^2 + x2 + u^2 - u"), (2,))
    assert s == s.ctx.parse("x2^2 + x2 + 2")


def test_specialize_dimension_mismatch():
    with pytest.raises(ValueError):
        specialize(P("u"), (1, 2))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.fractions(min_value=-20, max_value=20, max_denominator=20),
       st.fractions(min_value=-20, max_value=20, max_denominator=20))
def test_specialize_is_ring_homomorphism(seed, a1, a2):
    rng = random.Random(seed)
    f, g, h = (_random_poly(rng, C2) for _ in range(3))
    a = ParameterPoint((a1, a2))
    assert specialize(f * g + h, a) == specialize(f, a) * specialize(g, a) + specialize(h, a)


# --- exact division, gcd, factors ---------------------------------------------------


def test_exact_division():
    f = P("(x1 - u)*(x2^2 + u*x1 + 3)")
    assert exact_div(f, P("x1 - u")) == P("x2^2 + u*x1 + 3")
    assert divides(P("x1 - u"), f)
    assert not divides(P("x1 + u"), f)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_gcd_routes_agree_and_divide(seed):
    rng = random.Random(seed)
    h = _random_poly(rng, C2, 2, 3)
    a = _random_poly(rng, C2, 2, 3)
    b = _random_poly(rng, C2, 2, 3)
    f, g = h * a, h * b
    if f.is_zero or g.is_zero:
        return
    g1 = gcd(f, g)
    g2 = gcd(f, g, heuristic=False)
    assert g1 == g2
    assert divides(g1, f) and divides(g1, g)
    if not h.is_zero and not h.is_constant:
        assert divides(normalize(h), g1)


def test_gcd_finds_hidden_factor():
    h = Q("-x1*x2 + 2*u2 + 1")
    f = h * Q("u1*x1 + 3")
    g = h * Q("x2^2 - u2")
    assert associates(gcd(f, g), h)


def test_squarefree_primitive_factor_examples():
    assert set(squarefree_primitive_factors(P("(u-1)^2*u"))) == {P("u - 1"), P("u")}
    assert squarefree_primitive_factors(C1.const(5)) == []
    got = squarefree_primitive_factors(Q("u1*u2*(u1^3 + u2^2)"))
    assert set(got) == {Q("u1"), Q("u2"), Q("u1^3 + u2^2")}
    with pytest.raises(ValueError):
        squarefree_primitive_factors(C1.zero)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_squarefree_factors_reproduce_input(seed):
    rng = random.Random(seed)
    a = _random_poly(rng, C2, 2, 3)
    b = _random_poly(rng, C2, 2, 3)
    if a.is_zero or b.is_zero:
        return
    f = a**2 * b
    fs = squarefree_primitive_factors(f)
    for i, p in enumerate(fs):
        assert divides(p, f)
        assert squarefree_part(p) == p
        for q in fs[i + 1:]:
            assert gcd(p, q).is_constant
    # every irreducible factor of f divides the product of the factors
    prod = C2.one
    for p in fs:
        prod = prod * p
    assert divides(prod, f)
    if not a.is_constant:
        assert divides(normalize(squarefree_part(a)), prod)


def test_squarefree_decomposition_univariate():
    ctx = Context((), ("x",))
    f = ctx.parse("(x - 1)^3*(x + 2)^2*(x^2 + 1)")
    dec = {i: a for a, i in squarefree_decomposition(f)}
    assert associates(dec[3], ctx.parse("x - 1"))
    assert associates(dec[2], ctx.parse("x + 2"))
    assert associates(dec[1], ctx.parse("x^2 + 1"))


def test_factor_set_refines_to_coprime_pieces():
    fs = FactorSet([Q("u1*(u1 + u2)"), Q("(u1 + u2)*(u2 - 1)")])
    assert set(fs) == {Q("u1"), Q("u1 + u2"), Q("u2 - 1")}
    assert Q("u1 + u2") in fs
    assert len(fs.copy()) == 3


# --- text io -----------------------------------------------------------------------


def test_canonical_printing():
    assert format_recursive(P("(u-1)*x2^2 + x2 + u^2 - u")) == "(u - 1)*x2^2 + x2 + u^2 - u"
    assert format_polynomial(P("x1 - u")) == "x1 - u"
    assert str(Q("u1*x2^2 + x1^2")) == "u1*x2^2 + x1^2"


@pytest.mark.parametrize("text,col", [("2 x1", 3), ("x1 ** 2", 4), ("x1 + x3", 6), ("(x1 + 1", 8), ("x1 / x2", 4)])
def test_parse_errors_carry_position(text, col):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, C1, line=4)
    assert info.value.line == 4
    assert info.value.col == col


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_print_parse_round_trip(seed):
    rng = random.Random(seed)
    p = _random_poly(rng, C2, 4, 6).scale(Fraction(rng.randint(1, 5), rng.randint(1, 7)))
    assert parse_polynomial(format_polynomial(p), C2).terms == p.terms
    assert parse_polynomial(format_recursive(p), C2).terms == p.terms
