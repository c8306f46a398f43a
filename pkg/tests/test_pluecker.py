import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vsp10.exactfield import QQ, prime_field
from vsp10.linalg import Subspace, det, rank
from vsp10.multipoly import Poly
from vsp10.pluecker import (
    GOLDEN_PATH,
    NAMES,
    PAIR_INDEX,
    PAIRS,
    PRINTED_PATH,
    DualTwoVector,
    TwoVector,
    contact_cone_matrix,
    cremona_phi,
    cremona_sign,
    from_skew,
    golden_tables_text,
    lagrangian_of_line,
    line_meets_grassmannian,
    parse_printed_tables,
    pfaffian,
    pfaffian6,
    pfaffian6_poly,
    quadric_data_of_line,
    quadric_table,
    rank_support,
    to_skew,
    two_by_two_minors,
    verify_cremona_identity,
    wedge,
)

F = prime_field(10007)


def e(i, field=F):
    return [field.one if k == i else field.zero for k in range(6)]


def point(field=F, **coords):
    v = [field.zero] * 15
    for name, c in coords.items():
        v[PAIR_INDEX[(int(name[1]), int(name[2]))]] = field(c)
    return TwoVector(field, v)


def rand_vec(rng, n=6):
    return [F.random(rng) for _ in range(n)]


def rand_two_vector(rng, rk=6, cls=TwoVector):
    g = cls(F, [F.zero] * 15)
    for _ in range(rk // 2):
        g = g.add(wedge(F, rand_vec(rng), rand_vec(rng), cls))
    return g


def test_skew_matrix_of_basis_vector():
    M = to_skew(point(x01=1))
    assert M[0][1] == 1 and M[1][0] == F.neg(1)
    assert sum(1 for row in M for c in row if c) == 2


def test_zero_vector_gives_zero_matrix():
    assert all(c == 0 for row in to_skew(TwoVector(F, [0] * 15)) for c in row)


def test_pfaffian_at_standard_point():
    assert pfaffian6(QQ, to_skew(point(QQ, x01=1, x23=1, x45=1))) == 1


def test_pfaffian_of_rank_two_point_vanishes():
    rng = random.Random(3)
    assert pfaffian6(F, to_skew(wedge(F, rand_vec(rng), rand_vec(rng)))) == 0


def test_quadric_table_entries():
    q = quadric_table(QQ)
    assert q[(4, 5)].evaluate(point(QQ, x03=1, x12=1).coords) == 1
    # q01 has the term +x25*x34
    e25, e34 = PAIR_INDEX[(2, 5)], PAIR_INDEX[(3, 4)]
    mon = tuple(1 if k in (e25, e34) else 0 for k in range(15))
    assert q[(0, 1)].coeff(mon) == 1


def test_quadrics_vanish_on_rank_two_points():
    rng = random.Random(4)
    g = wedge(F, rand_vec(rng), rand_vec(rng))
    assert all(q.evaluate(g.coords) == 0 for q in quadric_table(F).values())
    assert cremona_phi(g).is_zero()


def test_phi_kernel_of_rank_four_point():
    g = point(x01=1, x23=1)
    alpha = cremona_phi(g)
    assert isinstance(alpha, DualTwoVector)
    r, support, kernel = rank_support(alpha)
    assert r == 2
    assert kernel == Subspace.span(F, 6, [e(0), e(1), e(2), e(3)])


def test_rank_support_examples():
    r, support, kernel = rank_support(point(x01=1))
    assert r == 2 and support == Subspace.span(F, 6, [e(0), e(1)])
    assert rank_support(point(x01=1, x23=1))[0] == 4
    rng = random.Random(5)
    g = rand_two_vector(rng)
    assert pfaffian6(F, to_skew(g)) != 0 and rank_support(g)[0] == 6


def test_cremona_identity_over_rationals():
    rep = verify_cremona_identity(QQ, spot_checks=100, spot_field=F, rng=random.Random(0))
    assert rep.pairs_checked == 15
    assert rep.unsigned_ok and rep.signed_ok and rep.euler_ok and rep.partials_ok
    assert rep.spot_checks == 100


def test_signed_quadrics_are_gradient_of_m():
    m = pfaffian6_poly(QQ)
    q = quadric_table(QQ)
    for k, (i, j) in enumerate(PAIRS):
        assert m.diff(k) == q[(i, j)].scale(cremona_sign(i, j))


def test_golden_file_is_canonical_text():
    assert GOLDEN_PATH.read_text() == golden_tables_text(QQ)
    printed = parse_printed_tables(PRINTED_PATH.read_text(), QQ)
    assert printed["m"] == pfaffian6_poly(QQ)
    assert len(printed["m"].terms) == 15
    for (i, j), q in quadric_table(QQ).items():
        assert printed[f"q{i}{j}"] == q


def test_lagrangian_normal_form():
    g = wedge(F, e(2), e(4)).add(wedge(F, e(3), e(5)))
    h = wedge(F, e(0), e(2)).add(wedge(F, e(1), e(3)))
    W = lagrangian_of_line(g, h)
    assert W == Subspace.span(F, 6, [e(0), e(1), e(4), e(5)])
    assert lagrangian_of_line(h, g) == W


def test_quadric_of_coordinate_secant_line():
    a1 = wedge(F, e(0), e(1), DualTwoVector)
    a2 = wedge(F, e(2), e(3), DualTwoVector)
    qd = quadric_data_of_line(a1, a2)
    assert qd.rank == 4 and qd.kind == "secant"
    names = ["02", "03", "12", "13"]
    expected = Subspace.span(F, 15, [[F.one if k == PAIR_INDEX[(int(s[0]), int(s[1]))] else F.zero for k in range(15)] for s in names])
    assert qd.P_ambient == expected


def test_quadric_of_tangent_configuration():
    a1 = wedge(F, e(0), e(1), DualTwoVector)
    a2 = wedge(F, e(0), e(2), DualTwoVector).add(wedge(F, e(1), e(3), DualTwoVector))
    assert quadric_data_of_line(a1, a2).rank == 3


def test_contact_cone_at_e01():
    tangent, N = contact_cone_matrix(point(x01=1))
    assert tangent.dim == 9

    def X(s):
        return Poly.var(F, 15, PAIR_INDEX[(int(s[0]), int(s[1]))])

    expected = [[X(s) for s in ["02", "03", "04", "05"]], [X(s) for s in ["12", "13", "14", "15"]]]
    assert N == expected


def test_lines_meeting_a_fixed_line_satisfy_the_minors():
    rng = random.Random(7)
    minors = two_by_two_minors(contact_cone_matrix(point(x01=1))[1])
    for _ in range(20):
        u = [F.random(rng), F.random(rng)] + [0] * 4  # a point of the line spanned by e0, e1
        meets = wedge(F, u, rand_vec(rng))
        assert all(q.evaluate(meets.coords) == 0 for q in minors)
        generic = wedge(F, rand_vec(rng), rand_vec(rng))
        assert any(q.evaluate(generic.coords) != 0 for q in minors)


def test_random_secants_have_smooth_quadric():
    rng = random.Random(8)
    for _ in range(10):
        # two rank-2 forms supported in a common 4-space U
        U = [rand_vec(rng) for _ in range(4)]

        def comb(c):
            return [F.sum(F.mul(c[k], U[k][i]) for k in range(4)) for i in range(6)]

        a1 = wedge(F, comb(rand_vec(rng, 4)), comb(rand_vec(rng, 4)), DualTwoVector)
        a2 = wedge(F, comb(rand_vec(rng, 4)), comb(rand_vec(rng, 4)), DualTwoVector)
        assert quadric_data_of_line(a1, a2).rank == 4


def test_generic_line_misses_grassmannian():
    rng = random.Random(9)
    g, h = rand_two_vector(rng), rand_two_vector(rng)
    assert not line_meets_grassmannian(g, h)
    assert line_meets_grassmannian(g, wedge(F, rand_vec(rng), rand_vec(rng)))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64), st.sampled_from([0, 2, 4, 6]))
def test_pfaffian_squared_is_determinant(seed, rk):
    rng = random.Random(seed)
    M = to_skew(rand_two_vector(rng, rk))
    pf = pfaffian(F, M)
    assert F.mul(pf, pf) == det(F, M)
    assert (pf != 0) == (rk == 6 and rank(F, M) == 6)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_skew_round_trip(seed):
    g = rand_two_vector(random.Random(seed))
    assert from_skew(F, to_skew(g)) == g


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_phi_is_projectively_self_inverse(seed):
    g = rand_two_vector(random.Random(seed))
    m = pfaffian6(F, to_skew(g))
    back = cremona_phi(cremona_phi(g))
    assert back.coords == g.scale(m).coords


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_phi_kernel_is_support(seed):
    rng = random.Random(seed)
    g = rand_two_vector(rng, 4)
    _, support, _ = rank_support(g)
    r, _, kernel = rank_support(cremona_phi(g))
    assert r == 2 and kernel == support


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**64))
def test_fiber_over_rank_two_form(seed):
    # 2-vectors supported on ker(alpha) of rank 4 map to multiples of alpha
    rng = random.Random(seed)
    alpha = wedge(F, rand_vec(rng), rand_vec(rng), DualTwoVector)
    _, _, kernel = rank_support(alpha)
    K = kernel.basis
    h = TwoVector(F, [F.zero] * 15)

    def in_kernel():
        c = rand_vec(rng, 4)
        return [F.sum(F.mul(c[k], K[k][i]) for k in range(4)) for i in range(6)]

    for _ in range(2):
        h = h.add(wedge(F, in_kernel(), in_kernel()))
    image = cremona_phi(h)
    if rank_support(h)[0] == 4:
        assert rank(F, [list(image.coords), list(alpha.coords)]) == 1
    else:
        assert image.is_zero()


def test_lagrangian_of_moved_normal_form_lines():
    # GL(6)-translates of the normal-form line stay in K and off G
    rng = random.Random(10)
    for _ in range(10):
        A = [rand_vec(rng) for _ in range(6)]
        if rank(F, A) < 6:
            continue

        def img(v):
            return [F.sum(F.mul(A[i][k], v[k]) for k in range(6)) for i in range(6)]

        g = wedge(F, img(e(2)), img(e(4))).add(wedge(F, img(e(3)), img(e(5))))
        h = wedge(F, img(e(0)), img(e(2))).add(wedge(F, img(e(1)), img(e(3))))
        W = lagrangian_of_line(g, h)
        assert W.dim == 4
        for t in range(3):
            M = to_skew(g.add(h, F.from_int(t)))
            for u in W.basis:
                for v in W.basis:
                    assert F.sum(F.mul(v[i], F.sum(F.mul(M[i][j], u[j]) for j in range(6))) for i in range(6)) == 0
