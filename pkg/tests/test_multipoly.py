import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vsp10.exactfield import QQ, prime_field
from vsp10.multipoly import Poly, apply_diff, compose, cube, degrevlex_key, monomials, restrict_linear
from vsp10.pluecker import NAMES, PAIR_INDEX, pfaffian6_poly

F = prime_field(10007)


def xs(field, n):
    return [Poly.var(field, n, i) for i in range(n)]


def rand_form(rng, field, n, d, terms=6):
    mons = monomials(n, d)
    return Poly(field, n, {rng.choice(mons): field.random(rng) for _ in range(terms)})


def test_difference_of_squares():
    x0, x1 = xs(QQ, 2)
    assert (x0 + x1) * (x0 - x1) == x0**2 - x1**2


def test_adding_zero():
    x0, x1 = xs(QQ, 2)
    a = x0 * x1 + x1
    assert a + Poly.zero(QQ, 2) == a


def test_no_stored_zeros():
    x0, x1 = xs(F, 2)
    p = (x0 + x1) - x1
    assert p.terms == {(1, 0): 1}
    assert all(len(e) == 2 for e in (x0 * x1 + x1).terms)


def test_evaluate_monomial():
    x0, x1 = xs(QQ, 2)
    assert (x0 * x1).evaluate([2, 3]) == 6


def test_pfaffian_at_standard_point():
    pt = [0] * 15
    for pair in [(0, 1), (2, 3), (4, 5)]:
        pt[PAIR_INDEX[pair]] = 1
    assert pfaffian6_poly(QQ).evaluate(pt) == 1


def test_restrict_examples():
    x = xs(QQ, 6)
    e0 = [1, 0, 0, 0, 0, 0]
    t = Poly.var(QQ, 1, 0)
    assert restrict_linear(x[0] ** 2, [e0]) == t**2
    assert restrict_linear(x[0] * x[1], [[1, 1, 0, 0, 0, 0]]) == t**2


@pytest.mark.parametrize(
    "D,f,expected",
    [
        ("x0^2", "x0^3", "6*x0"),
        ("x0*x1", "x0*x1*x2", "x2"),
        ("x0", "x1^3", "0"),
    ],
)
def test_apply_diff_examples(D, f, expected):
    def P(s):
        if s == "0":
            return Poly.zero(QQ, 3)
        s = s if s[0].isdigit() else "1*" + s
        return Poly.parse("+" + s, QQ, 3)

    assert apply_diff(P(D), P(f)) == P(expected)


def test_cube_examples():
    x0, x1 = xs(QQ, 2)
    assert cube(x0) == x0**3
    assert cube(x0 + x1) == cube(Poly.linear(QQ, [1, 1])) == x0**3 + (x0**2 * x1).scale(3) + (x0 * x1**2).scale(3) + x1**3


def test_apply_diff_rejects_small_characteristic():
    F5 = prime_field(5)
    x = xs(F5, 2)
    with pytest.raises(ValueError):
        apply_diff(x[0] ** 5, x[0] ** 5)


def test_text_round_trip_of_pfaffian():
    m = pfaffian6_poly(QQ)
    assert Poly.parse(m.to_text(NAMES), QQ, 15, NAMES) == m
    assert m.to_text(NAMES).startswith("+1*x05*x14*x23")


def test_monomials_are_descending_degrevlex():
    mons = monomials(4, 3)
    assert len(mons) == 20
    keys = [degrevlex_key(e) for e in mons]
    assert keys == sorted(keys, reverse=True)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_binomial_square(seed):
    rng = random.Random(seed)
    a, b = rand_form(rng, F, 4, 2), rand_form(rng, F, 4, 3)
    assert (a + b) ** 2 == a**2 + (a * b).scale(2) + b**2


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_homogeneity(seed):
    rng = random.Random(seed)
    f = rand_form(rng, F, 6, 3)
    pt = [F.random(rng) for _ in range(6)]
    c = F.random(rng)
    assert f.evaluate([F.mul(c, v) for v in pt]) == F.mul(F.pow(c, 3), f.evaluate(pt))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_restricted_pfaffian_agrees_on_points(seed):
    rng = random.Random(seed)
    m = pfaffian6_poly(F)
    basis = [[F.random(rng) for _ in range(15)] for _ in range(6)]
    r = restrict_linear(m, basis)
    t = [F.random(rng) for _ in range(6)]
    x = [F.sum(F.mul(t[k], basis[k][i]) for k in range(6)) for i in range(15)]
    assert r.evaluate(t) == m.evaluate(x)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_restriction_commutes_with_products(seed):
    rng = random.Random(seed)
    a, b = rand_form(rng, F, 6, 2), rand_form(rng, F, 6, 1)
    basis = [[F.random(rng) for _ in range(6)] for _ in range(3)]
    assert restrict_linear(a * b, basis) == restrict_linear(a, basis) * restrict_linear(b, basis)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_cube_chain_rule(seed):
    rng = random.Random(seed)
    coeffs = [F.random(rng) for _ in range(6)]
    l = Poly.linear(F, coeffs)
    j = rng.randrange(6)
    assert apply_diff(Poly.var(F, 6, j), cube(l)) == (l * l).scale(F.mul(3, coeffs[j]))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_pairing_with_cubed_operator(seed):
    rng = random.Random(seed)
    f = rand_form(rng, F, 6, 3, terms=10)
    a = [F.random(rng) for _ in range(6)]
    Pa3 = cube(Poly.linear(F, a))
    out = apply_diff(Pa3, f)
    assert out == Poly.const(F, 6, F.mul(6, f.evaluate(a)))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_operator_products_compose(seed):
    rng = random.Random(seed)
    f = rand_form(rng, F, 6, 3, terms=10)
    D1, D2 = rand_form(rng, F, 6, 1, 3), rand_form(rng, F, 6, 1, 3)
    assert apply_diff(D1 * D2, f) == apply_diff(D1, apply_diff(D2, f))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_compose_agrees_with_evaluation(seed):
    rng = random.Random(seed)
    f = rand_form(rng, F, 3, 3)
    images = [rand_form(rng, F, 2, 1, 2) for _ in range(3)]
    g = compose(f, images)
    t = [F.random(rng) for _ in range(2)]
    assert g.evaluate(t) == f.evaluate([h.evaluate(t) for h in images])
