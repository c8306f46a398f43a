"""Power-sum presentations of apolar cubic fourfolds from K3 sections of the Grassmannian.

A K3 instance is a random 9-dimensional subspace L_S of the space of 2-forms.
S is its intersection with the rank-2 locus, P_S = L_S-perp is a 6-dimensional
space of 2-vectors, the apolar cubic f is the cubic killed by the Plücker
quadrics restricted to P_S, and m_P is the Pfaffian cubic restricted to P_S.

A secant line through two points of S gives an 11-quadric ideal on P_S whose
10 points present f as a sum of 10 cubes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import lcm

from .apolarity import (
    apolar_profile,
    dual_socle_generator,
    powersum_certify,
    quadratic_relation_count,
    quadric_space,
    terracini_rank,
    terracini_rank_from_ideal,
)
from .exactfield import QQ, Field, PrimeField, UniPoly, common_field, embed, ext_create, poly_gcd, prime_field, roots
from .groebner import (
    HilbertData,
    Ideal,
    NotStabilized,
    SolverError,
    ZeroDimSolution,
    affine_multiplication,
    hilbert,
    is_projectively_empty,
    normal_form,
    saturate_by_linear,
    solve_zero_dim,
)
from .linalg import Subspace, rank
from .multipoly import Poly, restrict_linear
from .pluecker import (
    PAIR_INDEX,
    PAIRS,
    DualTwoVector,
    TwoVector,
    contact_cone_matrix,
    cremona_phi,
    cremona_sign,
    pfaffian6_poly,
    quadric_data_of_line,
    quadric_table,
    rank_support,
    two_by_two_minors,
    wedge,
)

__all__ = [
    "InstanceError",
    "K3Instance",
    "SecantLine",
    "GammaScheme",
    "PowerSumPresentation",
    "IncidenceReport",
    "NotTransverse",
    "k3_random",
    "instance_from_subspace",
    "s_points",
    "secant_line",
    "gamma_of_secant",
    "decompose",
    "tenfold_check",
    "sample_fprime_point",
    "sixfold_incidence",
    "split_incidence_probes",
    "relation_counts",
    "lemma318_matrices",
    "lemma318_verify",
    "degree_suite",
    "stage_rng",
    "checked_hilbert",
]

DEFAULT_RETRIES = 50
DEFAULT_LCM_CAP = 60


class InstanceError(RuntimeError):
    """Sampling could not produce a generic configuration within the retry bound."""


class NotTransverse(ValueError):
    """A probe point failed a genericity gate; the caller should re-sample."""


def stage_rng(seed, stage: str, k: int = 0) -> random.Random:
    """The generator for one pipeline stage, derived from the run seed."""
    return random.Random(f"{seed}/{stage}/{k}")


def checked_hilbert(I, max_degree: int | None = None) -> HilbertData:
    """Hilbert data of I, computing the basis up to max_degree if given.

    Raises NotStabilized when the truncated basis does not determine the
    dimension and degree.
    """
    G = I.groebner(max_degree) if isinstance(I, Ideal) else I
    hd = hilbert(G)
    if not hd.stabilized:
        raise NotStabilized(f"Hilbert function not stabilized with basis degree cap {G.max_degree}")
    return hd


def _restricted_quadrics(F: Field, basis) -> list[Poly]:
    table = quadric_table(F)
    return [restrict_linear(table[p], basis) for p in PAIRS]


@dataclass
class K3Instance:
    field: Field
    seed: object
    L: Subspace
    P: Subspace
    quadrics: list  # q_ij restricted to P_S, lex order, 6 variables
    f: Poly
    m_P: Poly
    S_ideal: Ideal
    profile: tuple
    s_hilbert: HilbertData
    attempts: int = 1
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def ambient(self, t, target: Field | None = None) -> TwoVector:
        """The 2-vector sum t_k b_k for P_S coordinates t."""
        T = target or self.field
        F = self.field
        coords = [T.zero] * 15
        for tk, row in zip(t, self.P.basis):
            if tk == T.zero:
                continue
            for i, c in enumerate(row):
                if c != F.zero:
                    coords[i] = T.add(coords[i], T.mul(tk, embed(c, F, T)))
        return TwoVector(T, coords)

    def in_L(self, y: TwoVector) -> bool:
        T = y.field
        F = self.field
        for row in self.P.basis:
            s = T.zero
            for c, yc in zip(row, y.coords):
                if c != F.zero:
                    s = T.add(s, T.mul(embed(c, F, T), yc))
            if s != T.zero:
                return False
        return True

    def quadrics_in(self, T: Field) -> list:
        if T == self.field:
            return self.quadrics
        key = ("q", T)
        if key not in self._cache:
            self._cache[key] = [q.map_field(T) for q in self.quadrics]
        return self._cache[key]


def instance_from_subspace(seed, L: Subspace, max_degree: int | None = None, attempts: int = 1) -> K3Instance:
    """Build an instance from L_S, raising InstanceError if a genericity gate fails."""
    F = L.field
    if L.n != 15 or L.dim != 9:
        raise InstanceError(f"L_S has dimension {L.dim}, expected 9")
    P = L.annihilator()
    for row in P.basis:
        if not all(_pairing_zero(row, v, F, F) for v in L.basis):
            raise AssertionError("P_S does not annihilate L_S")
    quads = _restricted_quadrics(F, P.basis)
    if not is_projectively_empty(Ideal(F, 6, quads)):
        raise InstanceError("P_S meets the Grassmannian")
    Q15 = quadric_space(quads)
    if Q15.dim != 15:
        raise InstanceError(f"restricted quadrics span {Q15.dim} dimensions")
    try:
        f = dual_socle_generator(Q15)
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc
    prof = apolar_profile(f)
    if prof.hilbert != (1, 6, 6, 1):
        raise InstanceError(f"apolar profile {prof.hilbert}")
    m_P = restrict_linear(pfaffian6_poly(F), P.basis)
    table_y = quadric_table(F)
    S_ideal = Ideal(F, 9, [restrict_linear(table_y[p], L.basis) for p in PAIRS])
    hd = checked_hilbert(S_ideal, max_degree)
    if (hd.dim, hd.degree) != (2, 14):
        raise InstanceError(f"S has dimension {hd.dim} and degree {hd.degree}")
    return K3Instance(F, seed, L, P, quads, f, m_P, S_ideal, prof.hilbert, hd, attempts)


def k3_random(seed, field: Field | None = None, retries: int = DEFAULT_RETRIES, max_degree: int | None = None) -> K3Instance:
    """Sample L_S from uniform 9x15 matrices and gate on every genericity invariant."""
    F = field or prime_field(10007)
    if not isinstance(F, PrimeField):
        raise ValueError("K3 instances are sampled over prime fields")
    rng = stage_rng(seed, "k3")
    last = ""
    for attempt in range(1, retries + 1):
        rows = [[F.random(rng) for _ in range(15)] for _ in range(9)]
        L = Subspace.span(F, 15, rows)
        if L.dim != 9:
            continue
        try:
            return instance_from_subspace(seed, L, max_degree, attempt)
        except InstanceError as exc:
            last = str(exc)
    raise InstanceError(f"no generic instance after {retries} attempts: {last}")


def _pairing_zero(row, v, F: Field, T: Field) -> bool:
    s = T.zero
    for c, x in zip(row, v):
        s = T.add(s, T.mul(embed(c, F, T), x))
    return s == T.zero


def s_points(inst: K3Instance, count: int, rng: random.Random | None = None, max_slices: int = 50):
    """Prime-field points of S found by cutting S with random 7-dim subspaces of L_S.

    Returns (points, slice_lengths).  Each slice is a zero-dimensional scheme
    whose length equals the degree of S.
    """
    F = inst.field
    rng = rng or stage_rng(inst.seed, "slices")
    table_y = quadric_table(F)
    found: list[DualTwoVector] = []
    lengths = []
    for _ in range(max_slices):
        R = [[F.random(rng) for _ in range(9)] for _ in range(7)]
        sub = [[F.sum(F.mul(r[a], inst.L.basis[a][i]) for a in range(9)) for i in range(15)] for r in R]
        if rank(F, sub) != 7:
            continue
        I = Ideal(F, 7, [restrict_linear(table_y[p], sub) for p in PAIRS])
        hd = hilbert(I)
        if hd.dim != 0:
            continue
        lengths.append(hd.degree)
        try:
            sol = solve_zero_dim(I, rng=rng)
        except SolverError:
            continue
        for pt in sol.points:
            if pt.degree != 1 or pt.multiplicity != 1:
                continue
            y = [F.sum(F.mul(s, row[i]) for s, row in zip(pt.coords, sub)) for i in range(15)]
            alpha = DualTwoVector(F, y)
            if any(c != F.zero for c in cremona_phi(alpha).coords):
                raise AssertionError("slice point is not on the rank-2 locus")
            if not inst.in_L(alpha):
                raise AssertionError("slice point is not in L_S")
            if not any(_proportional(alpha, b) for b in found):
                found.append(alpha)
        if len(found) >= count:
            return found[:count], lengths
    raise InstanceError(f"found {len(found)} rational points of S in {max_slices} slices")


def _proportional(a: TwoVector, b: TwoVector) -> bool:
    return rank(a.field, [list(a.coords), list(b.coords)]) < 2


@dataclass
class SecantLine:
    a1: DualTwoVector
    a2: DualTwoVector

    @property
    def field(self) -> Field:
        return self.a1.field


def secant_line(a1: DualTwoVector, a2: DualTwoVector) -> SecantLine:
    _, s1, _ = rank_support(a1)
    _, s2, _ = rank_support(a2)
    if (s1 + s2).dim != 4:
        raise ValueError("supports of the two points do not span a 4-space")
    return SecantLine(a1, a2)


@dataclass
class GammaScheme:
    ideal: Ideal
    hilbert: HilbertData
    line: SecantLine
    solution: ZeroDimSolution | None = None

    @property
    def length(self) -> int | None:
        return self.hilbert.length


def gamma_generators(inst: K3Instance, line: SecantLine) -> list[Poly]:
    """Functionals vanishing on the polar 3-space, composed with the quadric map, on P_S."""
    T = line.field
    qd = quadric_data_of_line(line.a1, line.a2)
    funcs = qd.P_ambient.annihilator()
    if funcs.dim != 11:
        raise ValueError(f"polar space has codimension {funcs.dim}, expected 11")
    quads = inst.quadrics_in(T)
    signs = [T.from_int(cremona_sign(i, j)) for i, j in PAIRS]
    gens = []
    for c in funcs.basis:
        acc = Poly.zero(T, 6)
        for k in range(15):
            if c[k] != T.zero:
                acc = acc + quads[k].scale(T.mul(c[k], signs[k]))
        gens.append(acc)
    return gens


def gamma_of_secant(
    inst: K3Instance,
    line: SecantLine,
    solve: bool = True,
    rng: random.Random | None = None,
    max_degree: int | None = None,
) -> GammaScheme:
    """The length-10 scheme on P_S attached to a secant line of S."""
    T = line.field
    I = Ideal(T, 6, gamma_generators(inst, line))
    hd = checked_hilbert(I, max_degree)
    gs = GammaScheme(I, hd, line)
    if hd.dim != 0:
        raise ValueError(f"scheme has projective dimension {hd.dim}")
    if not solve:
        return gs
    if hd.degree != 10:
        raise ValueError(f"scheme has length {hd.degree}, expected 10")
    if not isinstance(T, PrimeField):
        raise ValueError("solving needs a secant line over the prime field")
    rng = rng or stage_rng(inst.seed, "gamma")
    sol = solve_zero_dim(I, rng=rng)
    for pt in sol.points:
        if inst.m_P.evaluate(pt.coords, pt.field) != pt.field.zero:
            raise AssertionError("a point of the scheme is off the Pfaffian cubic")
    gs.solution = sol
    return gs


def _orbit(pt, T: Field) -> list:
    """All Galois conjugates of a solved point, embedded in T."""
    base = [embed(c, pt.field, T) for c in pt.coords]
    out = [base]
    for _ in range(pt.degree - 1):
        out.append([T.frobenius(c) for c in out[-1]])
    return out


@dataclass
class PowerSumPresentation:
    field: Field
    points: list
    lambdas: list
    exact: bool
    rank: int
    galois_equivariant: bool

    def residual(self, f: Poly) -> Poly:
        from .multipoly import cube

        T = self.field
        r = f.map_field(T)
        for p, lam in zip(self.points, self.lambdas):
            r = r - cube(Poly.linear(T, p)).scale(lam)
        return r


def compositum_for(points, cap: int = DEFAULT_LCM_CAP) -> Field:
    p = points[0].field.characteristic
    k = lcm(*(pt.degree for pt in points))
    if k > cap:
        raise ValueError(f"compositum degree {k} exceeds the cap {cap}")
    return ext_create(p, k)


def decompose(inst: K3Instance, gamma: GammaScheme, cap: int = DEFAULT_LCM_CAP) -> PowerSumPresentation:
    """f = sum lambda_i l_i^3 over the compositum of the residue fields of the points."""
    sol = gamma.solution
    if sol is None or not sol.complete:
        raise ValueError("scheme is not fully solved")
    T = compositum_for(sol.points, cap)
    pts = []
    orbit_sizes = []
    for pt in sol.points:
        orb = _orbit(pt, T)
        pts.extend(orb)
        orbit_sizes.append(len(orb))
    res = powersum_certify([(T, p) for p in pts], inst.f, target=T)
    if not res.exact:
        raise AssertionError("power-sum residual is not zero")
    if not res.unique:
        raise AssertionError(f"power-sum system has rank {res.rank}, expected {len(pts)}")
    # conjugate points carry conjugate coefficients
    ok = True
    k = 0
    for size in orbit_sizes:
        lam = res.lambdas[k : k + size]
        for a, b in zip(lam, lam[1:]):
            if T.frobenius(a) != b:
                ok = False
        if size > 1 and T.frobenius(lam[-1]) != lam[0]:
            ok = False
        k += size
    return PowerSumPresentation(T, pts, res.lambdas, res.exact, res.rank, ok)


@dataclass
class TenfoldReport:
    count: int
    distinct: int
    on_fprime: int
    rank_four: int

    @property
    def ok(self) -> bool:
        return self.count == 10 and self.distinct == 10 and self.on_fprime == 10 and self.rank_four == 10


def tenfold_check(inst: K3Instance, gamma: GammaScheme, cap: int = DEFAULT_LCM_CAP) -> TenfoldReport:
    """The 10 points of a solved scheme are pairwise distinct, lie on m_P = 0 and have rank 4."""
    sol = gamma.solution
    if sol is None or not sol.complete:
        raise ValueError("scheme is not fully solved")
    if not sol.reduced:
        raise ValueError("scheme is not reduced")
    T = compositum_for(sol.points, cap)
    pts = [p for pt in sol.points for p in _orbit(pt, T)]
    distinct = sum(1 for i, p in enumerate(pts) if all(rank(T, [p, q]) == 2 for j, q in enumerate(pts) if j != i))
    on = sum(1 for p in pts if inst.m_P.evaluate(p, T) == T.zero)
    r4 = sum(1 for p in pts if rank_support(inst.ambient(p, T))[0] == 4)
    return TenfoldReport(len(pts), distinct, on, r4)


def relation_counts(inst: K3Instance) -> tuple[int, int]:
    """Quadratic relations among the apolar quadrics of f and of m_P."""
    rf = quadratic_relation_count(apolar_profile(inst.f).perp2)
    rm = quadratic_relation_count(apolar_profile(inst.m_P).perp2)
    return rf, rm


# ---------------------------------------------------------------------------
# 6:1 incidence through a point of the Pfaffian cubic


def sample_fprime_point(inst: K3Instance, rng: random.Random, tries: int = 200):
    """A prime-field point of m_P = 0 (P_S coordinates) from a random line."""
    F = inst.field
    for _ in range(tries):
        a = [F.random(rng) for _ in range(6)]
        b = [F.random(rng) for _ in range(6)]
        c = restrict_linear(inst.m_P, [a, b])
        u = UniPoly(F, [c.coeff((k, 3 - k)) for k in range(4)])
        if u.degree < 1:
            continue
        rs = roots(u)
        if rs:
            r = rs[0]
            return [F.add(F.mul(r, ai), bi) for ai, bi in zip(a, b)]
    raise InstanceError("no rational point on the Pfaffian cubic found")


@dataclass
class IncidenceReport:
    g: list
    tangent_dim: int
    slice_dim: int
    scroll_length: int
    scroll_points: list
    split: bool
    lines: list
    memberships: list
    gamma_lengths: list

    @property
    def ok(self) -> bool:
        return self.scroll_length == 4 and len(self.memberships) == 6 and all(self.memberships)


def sixfold_incidence(inst: K3Instance, g, rng: random.Random | None = None, require_split: bool = False) -> IncidenceReport:
    """The secant lines of S whose schemes pass through g, found on a quartic scroll."""
    F = inst.field
    rng = rng or stage_rng(inst.seed, "incidence")
    if inst.m_P.evaluate(g) != F.zero:
        raise ValueError("probe point is not on the Pfaffian cubic")
    x = inst.ambient(g)
    r, support, _ = rank_support(x)
    if r != 4:
        raise ValueError(f"probe point has rank {r}, expected 4")
    alpha = cremona_phi(x)
    if rank_support(alpha)[0] != 2:
        raise AssertionError("image of a rank-4 point is not rank 2")
    ub = support.basis
    Pg = Subspace.span(F, 15, [wedge(F, ub[a], ub[b]).coords for a, b in combinations(range(4), 2)])
    T = Pg.annihilator()
    tangent, N = contact_cone_matrix(alpha)
    if tangent != T:
        raise AssertionError("tangent space from the contact cone disagrees with the polar space")
    W = inst.L.intersect(T)
    if W.dim != 4:
        raise NotTransverse(f"L_S meets the tangent space in dimension {W.dim}")
    minors = [restrict_linear(mn, W.basis) for mn in two_by_two_minors(N)]
    I = Ideal(F, 4, minors)
    hd = hilbert(I)
    if hd.dim != 0 or hd.degree != 4:
        raise NotTransverse(f"scroll section has dimension {hd.dim} and degree {hd.degree}")
    sol = solve_zero_dim(I, rng=rng)
    split = all(p.degree == 1 for p in sol.points) and sol.reduced
    if require_split and not split:
        raise NotTransverse("scroll points are not all rational")
    if not sol.reduced:
        raise NotTransverse("scroll section is not reduced")
    E = common_field([p.field for p in sol.points])
    betas = []
    for pt in sol.points:
        for w in _orbit(pt, E):
            y = [E.zero] * 15
            for wa, row in zip(w, W.basis):
                for i, c in enumerate(row):
                    if c != F.zero:
                        y[i] = E.add(y[i], E.mul(wa, embed(c, F, E)))
            beta = DualTwoVector(E, y)
            if any(v != E.zero for v in cremona_phi(beta).coords) or not inst.in_L(beta):
                raise AssertionError("scroll point is not on S")
            betas.append(beta)
    gE = [embed(c, F, E) for c in g]
    lines, members, lengths = [], [], []
    for b1, b2 in combinations(betas, 2):
        line = secant_line(b1, b2)
        gens = gamma_generators(inst, line)
        members.append(all(q.evaluate(gE, E) == E.zero for q in gens))
        if isinstance(E, PrimeField):
            lengths.append(hilbert(Ideal(E, 6, gens)).degree)
        lines.append(line)
    return IncidenceReport(g, T.dim, W.dim, hd.degree, betas, split, lines, members, lengths)


def split_incidence_probes(inst: K3Instance, count: int, rng: random.Random | None = None, max_probes: int = 2000):
    """Probe points of F' until ``count`` of them have fully split scroll sections.

    Returns (reports, resampled) where resampled counts rejected probes.
    """
    rng = rng or stage_rng(inst.seed, "probes")
    reports = []
    resampled = 0
    for _ in range(max_probes):
        g = sample_fprime_point(inst, rng)
        try:
            rep = sixfold_incidence(inst, g, rng=rng, require_split=True)
        except NotTransverse:
            resampled += 1
            continue
        reports.append(rep)
        if len(reports) >= count:
            return reports, resampled
    raise InstanceError(f"only {len(reports)} split probes in {max_probes} attempts")


# ---------------------------------------------------------------------------
# the explicit ten-point example


def lemma318_matrices(F: Field):
    x = [Poly.var(F, 6, i) for i in range(6)]
    A = [[x[0], x[2], x[4], x[0] + x[5]], [x[1], x[3], x[5], x[3] + x[4]]]
    B = [[x[0], x[1], x[1] + x[2], x[1] + x[5]], [x[2], x[3], x[4] - x[5], x[0] + x[3]]]
    return A, B


@dataclass
class TenPointReport:
    field: Field
    length: int | None
    dim: int | None
    shared_minor: bool
    reduced: bool
    terracini_points: int | None
    terracini_ideal: int
    points: list

    @property
    def ok(self) -> bool:
        tp = self.terracini_points in (None, 56)
        return self.length == 10 and self.dim == 0 and self.shared_minor and self.reduced and tp and self.terracini_ideal == 56


def _squarefree(u: UniPoly) -> bool:
    return poly_gcd(u, u.derivative()).degree == 0


def lemma318_verify(field: Field | None = None, rng: random.Random | None = None, max_degree: int | None = None) -> TenPointReport:
    """Common rank-drop locus of the two 2x4 matrices and the Terracini rank there."""
    F = field or prime_field(10007)
    rng = rng or random.Random("lemma318")
    A, B = lemma318_matrices(F)
    mA, mB = two_by_two_minors(A), two_by_two_minors(B)
    x = [Poly.var(F, 6, i) for i in range(6)]
    shared = x[0] * x[3] - x[1] * x[2]
    shared_ok = shared in mA and shared in mB
    I = Ideal(F, 6, mA + mB)
    hd = checked_hilbert(I, max_degree)
    # saturate away anything supported off a random chart, then test reducedness there
    ell = [F.from_int(rng.randint(1, 97)) for _ in range(6)]
    J = saturate_by_linear(I, ell)
    GJ = J.groebner()
    u = [F.from_int(rng.randint(1, 97)) for _ in range(5)]
    _, M, chi = affine_multiplication(GJ, ell, u)
    reduced = _squarefree(chi) and chi.degree == hd.degree
    t_ideal = terracini_rank_from_ideal(GJ)
    t_points = None
    points = []
    if isinstance(F, PrimeField):
        sol = solve_zero_dim(I, rng=rng)
        points = sol.points
        reduced = reduced and sol.reduced
        t_points = terracini_rank(points, orbits=True)
    return TenPointReport(F, hd.degree if hd.dim == 0 else None, hd.dim, shared_ok, reduced, t_points, t_ideal, points)


# ---------------------------------------------------------------------------
# preimage degrees


@dataclass
class DegreeCheck:
    name: str
    expected: tuple
    observed: tuple
    containment: bool

    @property
    def ok(self) -> bool:
        return self.expected == self.observed and self.containment


def _X(F: Field, s: str) -> Poly:
    return Poly.var(F, 15, PAIR_INDEX[(int(s[0]), int(s[1]))])


def degree_suite(field: Field | None = None, max_degree: int | None = None) -> list[DegreeCheck]:
    """Hilbert dimension and degree of the preimages of lines and planes, and of Z(01,23)."""
    F = field or prime_field(10007)
    qt = quadric_table(F)

    def mat(rows):
        return [[_X(F, s) for s in r] for r in rows]

    def check(name, gens, expected, others):
        G = Ideal(F, 15, gens).groebner(max_degree)
        h = checked_hilbert(G)
        contained = all(normal_form(qt[k], G).is_zero() for k in others)
        return DegreeCheck(name, expected, (h.dim, h.degree), contained)

    out = []
    scroll = two_by_two_minors(mat([["13", "14", "15"], ["23", "24", "25"]]))
    lin = [_X(F, s) for s in ["01", "02", "03", "04", "05", "12"]]
    out.append(check("line preimage: cubic scroll", scroll + lin, (6, 3), [k for k in PAIRS if k not in [(0, 1), (0, 2)]]))
    first = two_by_two_minors(mat([["03", "04", "05"], ["13", "14", "15"], ["23", "24", "25"]]))
    lin = [_X(F, s) for s in ["01", "02", "12"]]
    out.append(check("plane preimage, first kind", first + lin, (7, 6), [k for k in PAIRS if k not in [(0, 1), (0, 2), (1, 2)]]))
    lin = [_X(F, s) for s in ["01", "02", "03", "04", "05"]]
    out.append(check("plane preimage, second kind", [qt[(0, 4)], qt[(0, 5)]] + lin, (7, 4), [k for k in PAIRS if k not in [(0, 1), (0, 2), (0, 3)]]))
    # Z(01,23): the 11 quadrics cut G together with a 7-fold inside x01 = x23 = 0
    V = [qt[k] for k in PAIRS if k not in [(0, 2), (0, 3), (1, 2), (1, 3)]]
    lin = [_X(F, "01"), _X(F, "23")]
    GV = Ideal(F, 15, V + lin).groebner(max_degree)
    hv = checked_hilbert(GV)
    N01 = mat([["02", "03", "04", "05"], ["12", "13", "14", "15"]])
    N23 = mat([["02", "12", "24", "25"], ["03", "13", "34", "35"]])
    GN = Ideal(F, 15, two_by_two_minors(N01) + two_by_two_minors(N23) + lin).groebner(max_degree)
    hn = checked_hilbert(GN)
    v_in_n = all(normal_form(q, GN).is_zero() for q in V)
    sat = saturate_by_linear(Ideal(F, 15, V), [F.one] + [F.zero] * 14).groebner()
    plucker = Ideal(F, 15, [qt[k] for k in PAIRS]).groebner()
    out.append(DegreeCheck("Z(01,23) from the 11 quadrics", (7, 10), (hv.dim, hv.degree), True))
    out.append(DegreeCheck("Z(01,23) from the minors of N01 and N23", (7, 10), (hn.dim, hn.degree), v_in_n))
    hs = checked_hilbert(sat)
    out.append(DegreeCheck("11 quadrics saturated by x01 give G", (8, 14), (hs.dim, hs.degree), sat == plucker))
    return out
