import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vsp10.apolarity import (
    DegenerateSocle,
    NotAPresentation,
    apolar_profile,
    catalecticant,
    dual_socle_generator,
    powersum_certify,
    quadratic_relation_count,
    quadric_space,
    terracini_rank,
    terracini_rank_from_ideal,
)
from vsp10.exactfield import ext_create, prime_field
from vsp10.groebner import Ideal
from vsp10.linalg import Subspace, nullspace, rank
from vsp10.multipoly import Poly, apply_diff, cube, monomials

F = prime_field(10007)


def xs(field=F):
    return [Poly.var(field, 6, i) for i in range(6)]


def rand_points(rng, k):
    return [[F.random(rng) for _ in range(6)] for _ in range(k)]


def power_sum(rng, pts):
    f = Poly.zero(F, 6)
    for p in pts:
        f = f + cube(Poly.linear(F, p)).scale(F.random(rng) or 1)
    return f


def vanishing_forms(pts, d):
    mons = monomials(6, d)
    rows = [[Poly.monomial(F, 6, e).evaluate(p) for e in mons] for p in pts]
    return [Poly(F, 6, dict(zip(mons, v))) for v in nullspace(F, rows, len(mons))]


def normalized(f):
    e, c = f.sorted_terms()[0]
    return f.scale(F.inv(c))


def test_catalecticant_ranks():
    x = xs()
    for f, r in [(x[0] ** 3, 1), (x[0] ** 3 + x[1] ** 3, 2)]:
        for k in (1, 2):
            assert rank(F, catalecticant(f, k).matrix) == r
    assert catalecticant(x[0] ** 3, 1).shape == (21, 6)
    assert catalecticant(x[0] ** 3, 2).shape == (6, 21)


def test_profiles_of_monomials():
    x = xs()
    assert apolar_profile(x[0] ** 3).hilbert == (1, 1, 1, 1)
    assert apolar_profile(x[0] ** 2 * x[1]).hilbert == (1, 2, 2, 1)


def test_generic_power_sum_profile():
    rng = random.Random(1)
    assert apolar_profile(power_sum(rng, rand_points(rng, 10))).hilbert == (1, 6, 6, 1)


def test_degenerate_socle_is_flagged():
    x = xs()
    perp = apolar_profile(x[0] ** 3).perp2_polys
    assert len(perp) == 20
    with pytest.raises(DegenerateSocle):
        dual_socle_generator(perp[:15])


def test_socle_generator_is_basis_independent():
    rng = random.Random(2)
    f = power_sum(rng, rand_points(rng, 10))
    Q = apolar_profile(f).perp2
    g1 = dual_socle_generator(Q)
    mixed = []
    for _ in range(15):
        c = [F.random(rng) for _ in Q.basis]
        mixed.append([F.sum(F.mul(ck, row[i]) for ck, row in zip(c, Q.basis)) for i in range(21)])
    g2 = dual_socle_generator(Subspace.span(F, 21, mixed))
    assert g1 == g2 == normalized(f)


def test_powersum_of_two_cubes():
    x = xs()
    e0 = [1, 0, 0, 0, 0, 0]
    e1 = [0, 1, 0, 0, 0, 0]
    res = powersum_certify([(F, e0), (F, e1)], x[0] ** 3 + x[1] ** 3)
    assert res.lambdas == [1, 1] and res.exact and res.unique
    with pytest.raises(NotAPresentation):
        powersum_certify([(F, e0), (F, e1)], x[0] ** 2 * x[1])


def test_terracini_rank_examples():
    rng = random.Random(3)
    p = rand_points(rng, 1)[0]
    assert terracini_rank([(F, p)] * 10) == 6
    pts = rand_points(rng, 10)
    assert terracini_rank([(F, q) for q in pts]) == 56
    G = Ideal(F, 6, vanishing_forms(pts, 2) + vanishing_forms(pts, 3)).groebner()
    assert terracini_rank_from_ideal(G) == 56


def test_terracini_over_orbits_matches_compositum():
    # a Frobenius orbit of 4 points plus 6 rational points
    rng = random.Random(4)
    E = ext_create(10007, 4)
    q = [E.random(rng) for _ in range(6)]
    orbit = [q]
    for _ in range(3):
        orbit.append([E.frobenius(c) for c in orbit[-1]])
    rational = rand_points(rng, 6)
    full = [(E, o) for o in orbit] + [(F, r) for r in rational]
    reps = [(E, q)] + [(F, r) for r in rational]
    assert terracini_rank(full) == terracini_rank(reps, orbits=True) == 56


def test_relation_count_for_monomial_quadrics():
    mons = monomials(6, 2)
    chosen = [e for e in mons if e != (2, 0, 0, 0, 0, 0)][:15]
    Q = [Poly.monomial(F, 6, e) for e in chosen]
    products = {tuple(a + b for a, b in zip(u, v)) for i, u in enumerate(chosen) for v in chosen[i:]}
    assert quadratic_relation_count(Q) == 120 - len(products)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_apolar_quadrics_kill_the_cubic(seed):
    rng = random.Random(seed)
    f = power_sum(rng, rand_points(rng, rng.randint(1, 10)))
    prof = apolar_profile(f)
    assert prof.hilbert[1] == prof.hilbert[2]
    for D in prof.perp2_polys:
        assert apply_diff(D, f).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_catalecticant_symmetry(seed):
    rng = random.Random(seed)
    mons = monomials(6, 3)
    f = Poly(F, 6, {rng.choice(mons): F.random(rng) for _ in range(rng.randint(1, 12))})
    if f.is_zero():
        return
    assert rank(F, catalecticant(f, 1).matrix) == rank(F, catalecticant(f, 2).matrix)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_socle_round_trip(seed):
    rng = random.Random(seed)
    f = normalized(power_sum(rng, rand_points(rng, 10)))
    prof = apolar_profile(f)
    if prof.hilbert != (1, 6, 6, 1):
        return
    assert dual_socle_generator(prof.perp2) == f


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_apolarity_lemma_both_directions(seed):
    rng = random.Random(seed)
    pts = rand_points(rng, 10)
    f = power_sum(rng, pts)
    perp = apolar_profile(f).perp2
    I2 = quadric_space(vanishing_forms(pts, 2))
    assert perp.contains_subspace(I2)
    assert powersum_certify([(F, p) for p in pts], f).exact
    others = rand_points(rng, 10)
    J2 = quadric_space(vanishing_forms(others, 2))
    assert not perp.contains_subspace(J2)
    with pytest.raises(NotAPresentation):
        powersum_certify([(F, p) for p in others], f)
