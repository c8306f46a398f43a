import random

import pytest

from vsp10.apolarity import powersum_certify, quadric_space
from vsp10.exactfield import prime_field
from vsp10.groebner import Ideal, is_projectively_empty
from vsp10.linalg import rank
from vsp10.pluecker import cremona_phi, rank_support
from vsp10.serialize import dump_instance
from vsp10.vsp import (
    degree_suite,
    gamma_generators,
    k3_random,
    lemma318_verify,
    relation_counts,
    sample_fprime_point,
    secant_line,
    sixfold_incidence,
    split_incidence_probes,
    stage_rng,
    tenfold_check,
)


def test_instance_invariants(inst1):
    F = inst1.field
    assert inst1.L.dim == 9 and inst1.P.dim == 6
    for row in inst1.P.basis:
        for v in inst1.L.basis:
            assert F.sum(F.mul(a, b) for a, b in zip(row, v)) == 0
    assert is_projectively_empty(Ideal(F, 6, inst1.quadrics))
    assert inst1.profile == (1, 6, 6, 1)
    assert (inst1.s_hilbert.dim, inst1.s_hilbert.degree) == (2, 14)


def test_instances_are_deterministic(inst1):
    again = k3_random(1, prime_field(10007))
    assert dump_instance(again) == dump_instance(inst1)
    assert dump_instance(k3_random(2)) != dump_instance(inst1)


def test_points_of_s(inst1, s_points1):
    pts, lengths = s_points1
    assert len(pts) == 4
    assert set(lengths) == {14}
    for a in pts:
        assert cremona_phi(a).is_zero()
        assert inst1.in_L(a)


def test_gamma_scheme(inst1, gamma1):
    assert gamma1.length == 10
    assert len(gamma1.ideal.gens) == 11
    sol = gamma1.solution
    assert sol.complete and sol.total == 10
    for pt in sol.points:
        T = pt.field
        assert all(g.evaluate(pt.coords, T) == T.zero for g in gamma1.ideal.gens)
        assert inst1.m_P.evaluate(pt.coords, T) == T.zero


def test_power_sum_presentation(inst1, presentation1):
    pres = presentation1
    assert pres.exact and pres.rank == 10
    assert pres.residual(inst1.f).is_zero()
    assert pres.galois_equivariant


def test_scaling_a_point_rescales_its_coefficient(presentation1, inst1):
    T = presentation1.field
    c = T.from_int(3)
    pts = [list(p) for p in presentation1.points]
    pts[0] = [T.mul(c, a) for a in pts[0]]
    res = powersum_certify([(T, p) for p in pts], inst1.f, target=T)
    assert res.exact
    assert res.lambdas[0] == T.mul(presentation1.lambdas[0], T.inv(T.pow(c, 3)))
    assert res.lambdas[1:] == presentation1.lambdas[1:]


def test_tenfold(inst1, gamma1):
    rep = tenfold_check(inst1, gamma1)
    assert rep.ok
    assert (rep.count, rep.distinct, rep.on_fprime, rep.rank_four) == (10, 10, 10, 10)


def test_tangent_secant_is_rejected(inst1, s_points1):
    pts, _ = s_points1
    with pytest.raises(ValueError):
        secant_line(pts[0], pts[0].scale(2))


def test_sixfold_incidence(inst1):
    rng = random.Random(5)
    g = sample_fprime_point(inst1, rng)
    rep = sixfold_incidence(inst1, g, rng=rng)
    assert rep.tangent_dim == 9 and rep.slice_dim == 4
    assert rep.scroll_length == 4
    assert len(rep.scroll_points) == 4 and len(rep.lines) == 6
    assert all(rep.memberships)
    for b in rep.scroll_points:
        assert cremona_phi(b).is_zero() and inst1.in_L(b)


def test_split_probes_report_resampling(inst1):
    reports, resampled = split_incidence_probes(inst1, 2, rng=stage_rng(1, "test-probes"))
    assert len(reports) == 2 and resampled >= 0
    for r in reports:
        assert r.split and r.ok and r.gamma_lengths == [10] * 6


def test_probe_off_the_cubic_is_rejected(inst1):
    F = inst1.field
    g = [F.one] + [F.zero] * 5
    if inst1.m_P.evaluate(g) == 0:
        g = [F.one, F.one] + [F.zero] * 4
    with pytest.raises(ValueError):
        sixfold_incidence(inst1, g)


def test_probe_points_have_rank_four(inst1):
    rng = random.Random(6)
    for _ in range(5):
        g = sample_fprime_point(inst1, rng)
        assert inst1.m_P.evaluate(g) == 0
        assert rank_support(inst1.ambient(g))[0] == 4


def test_relation_counts(inst1):
    rf, rm = relation_counts(inst1)
    assert rf >= 9 and rm == 0


def test_ambient_points_span_p(inst1):
    F = inst1.field
    coords = [inst1.ambient([F.one if i == k else F.zero for i in range(6)]).coords for k in range(6)]
    assert rank(F, [list(c) for c in coords]) == 6


def test_gamma_is_cut_by_eleven_independent_quadrics(inst1, s_points1):
    pts, _ = s_points1
    gens = gamma_generators(inst1, secant_line(pts[2], pts[3]))
    assert len(gens) == 11
    assert quadric_space(gens).dim == 11


@pytest.mark.parametrize("p", [10007, 10009])
def test_degree_suite(p):
    checks = degree_suite(prime_field(p))
    assert len(checks) == 6
    for c in checks:
        assert c.ok, c


def test_lemma318_over_prime_field():
    rep = lemma318_verify(prime_field(10007))
    assert rep.ok
    assert rep.length == 10 and rep.terracini_points == 56 and rep.terracini_ideal == 56
    assert sum(p.degree for p in rep.points) == 10
