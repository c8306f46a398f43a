import random
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from vsp10.exactfield import prime_field
from vsp10.groebner import Ideal, buchberger, hilbert, is_projectively_empty, normal_form, saturate_by_linear, solve_zero_dim
from vsp10.linalg import nullspace, rank
from vsp10.multipoly import Poly, monomials
from vsp10.pluecker import PAIR_INDEX, PAIRS, pfaffian6_poly, quadric_table

F = prime_field(10007)


def xs(n):
    return [Poly.var(F, n, i) for i in range(n)]


def rand_form(rng, n, d, terms=4):
    mons = monomials(n, d)
    return Poly(F, n, {rng.choice(mons): F.random(rng) for _ in range(terms)})


def interpolating_ideal(points, n, d):
    """All degree-d forms vanishing at the given points."""
    mons = monomials(n, d)
    rows = [[Poly.monomial(F, n, e).evaluate(p) for e in mons] for p in points]
    return [Poly(F, n, dict(zip(mons, v))) for v in nullspace(F, rows, len(mons))]


def proportional(u, v):
    return rank(F, [list(u), list(v)]) == 1


def test_principal_ideal_is_normalized():
    x0, x1, x2 = xs(3)
    f = (x0 * x1 + x2 * x2).scale(5)
    G = Ideal(F, 3, [f]).groebner()
    assert G.polys == [f.monic()]


def test_variables_form_their_own_basis():
    x0, x1 = xs(2)
    assert Ideal(F, 2, [x0, x1]).groebner().polys in ([x0, x1], [x1, x0])


def test_pluecker_ideal():
    qs = list(quadric_table(F).values())
    G = Ideal(F, 15, qs).groebner()
    assert len(G.polys) == 15
    h = hilbert(G)
    assert (h.dim, h.degree) == (8, 14)
    assert all(normal_form(q, G).is_zero() for q in qs)
    x01 = Poly.var(F, 15, PAIR_INDEX[(0, 1)])
    assert normal_form(x01 * qs[0], G).is_zero()
    # 3m = sum of multiples of the q_ij, so m lies in the ideal as well
    assert normal_form(pfaffian6_poly(F), G).is_zero()
    assert not normal_form(Poly.var(F, 15, 0) ** 2, G).is_zero()


def test_normal_form_of_one():
    x0, x1 = xs(2)
    G = Ideal(F, 2, [x0 * x1]).groebner()
    assert normal_form(Poly.one(F, 2), G) == Poly.one(F, 2)


def test_hilbert_function_of_polynomial_ring():
    h = hilbert(Ideal(F, 6, []), D=8)
    assert h.values == [comb(d + 5, 5) for d in range(9)]
    assert (h.dim, h.degree) == (5, 1)


def test_hilbert_function_of_ten_points():
    rng = random.Random(11)
    pts = [[F.random(rng) for _ in range(6)] for _ in range(10)]
    gens = interpolating_ideal(pts, 6, 2) + interpolating_ideal(pts, 6, 3)
    h = hilbert(Ideal(F, 6, gens), D=6)
    assert h.values[2:] == [10] * 5
    assert (h.dim, h.degree) == (0, 10)


def test_projective_emptiness():
    assert is_projectively_empty(Ideal(F, 6, xs(6)))
    x = xs(3)
    assert not is_projectively_empty(Ideal(F, 3, [x[0], x[1]]))


def test_double_point():
    x0, x1, x2 = xs(3)
    sol = solve_zero_dim(Ideal(F, 3, [x0 * x0, x1]))
    (pt,) = sol.points
    assert pt.multiplicity == 2 and pt.degree == 1 and sol.total == 2
    assert proportional(pt.coords, [0, 0, 1])


def test_two_points_on_a_line():
    x0, x1 = xs(2)
    sol = solve_zero_dim(Ideal(F, 2, [x0 * x0 - x1 * x1]))
    assert sol.reduced and sol.total == 2
    found = [p.coords for p in sol.points]
    assert all(p.degree == 1 for p in sol.points)
    assert any(proportional(c, [1, 1]) for c in found) and any(proportional(c, [1, F.neg(1)]) for c in found)


def test_saturation_removes_a_variable():
    x0, x1 = xs(2)
    J = saturate_by_linear(Ideal(F, 2, [x0 * x1]), [1, 0])
    assert J.groebner().polys == [x1]


def test_saturated_ideal_is_unchanged():
    x = xs(3)
    I = Ideal(F, 3, [x[0] * x[1] - x[2] * x[2], x[0] + x[1] + x[2]])
    J = saturate_by_linear(I, [1, 2, 3])
    assert J.groebner() == I.groebner()


def test_saturation_separates_grassmannian_component():
    qt = quadric_table(F)
    V = [qt[k] for k in PAIRS if k not in [(0, 2), (0, 3), (1, 2), (1, 3)]]
    x01 = [F.zero] * 15
    x01[PAIR_INDEX[(0, 1)]] = F.one
    lin = [Poly.linear(F, x01), Poly.var(F, 15, PAIR_INDEX[(2, 3)])]
    h_union = hilbert(Ideal(F, 15, V))
    h_z = hilbert(Ideal(F, 15, V + lin))
    sat = saturate_by_linear(Ideal(F, 15, V), x01)
    h_sat = hilbert(sat)
    assert (h_z.dim, h_z.degree) == (7, 10)
    assert (h_sat.dim, h_sat.degree) == (8, 14)
    assert sat.groebner() == Ideal(F, 15, list(qt.values())).groebner()
    assert h_union.dim == 8


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_reduced_basis_is_unique(seed):
    rng = random.Random(seed)
    n = rng.choice([3, 4])
    gens = [rand_form(rng, n, rng.choice([1, 2, 2])) for _ in range(rng.randint(2, 4))]
    G1 = buchberger(Ideal(F, n, gens))
    shuffled = gens[:]
    rng.shuffle(shuffled)
    # scale and add combinations; the ideal is unchanged
    shuffled = [g.scale(F.random(rng) or 1) for g in shuffled]
    G2 = buchberger(Ideal(F, n, shuffled))
    assert G1 == G2
    assert sorted(p.to_text() for p in G1.polys) == sorted(p.to_text() for p in G2.polys)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_normal_forms(seed):
    rng = random.Random(seed)
    n = 4
    gens = [rand_form(rng, n, 2) for _ in range(3)]
    G = Ideal(F, n, gens).groebner()
    combo = Poly.zero(F, n)
    for g in gens:
        combo = combo + g * rand_form(rng, n, 1)
    assert normal_form(combo, G).is_zero()
    assert all(normal_form(g, G).is_zero() for g in gens)
    p, q = rand_form(rng, n, 2), rand_form(rng, n, 1)
    assert normal_form(p * q, G) == normal_form(normal_form(p, G) * q, G)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_solver_points_satisfy_generators(seed):
    rng = random.Random(seed)
    n = 3
    if rng.random() < 0.5:
        # two random conics: four points, possibly over extensions
        gens = [rand_form(rng, n, 2, 6) for _ in range(2)]
        known = None
    else:
        known = [[F.random(rng) for _ in range(n)] for _ in range(rng.randint(1, 5))]
        gens = interpolating_ideal(known, n, 3)
    I = Ideal(F, n, gens)
    h = hilbert(I)
    if h.dim != 0:
        return
    sol = solve_zero_dim(I, rng=rng)
    assert sol.complete and sol.total == h.degree
    for pt in sol.points:
        T = pt.field
        assert all(g.evaluate(pt.coords, T) == T.zero for g in gens)
    if known is not None and sol.reduced:
        assert all(any(p.degree == 1 and proportional(p.coords, k) for p in sol.points) for k in known)
