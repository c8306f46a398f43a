"""Plücker coordinates on the 15-space of 2-vectors in a 6-dimensional space.

Coordinates x_ij (0 <= i < j <= 5) are ordered lexicographically:
x01, x02, ..., x05, x12, ..., x45.  The same indexing serves the dual space
of 2-forms, whose coordinates are written y_ij.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .exactfield import QQ, Field, poly_gcd, UniPoly
from .linalg import Subspace, inverse, rank
from .multipoly import Poly, compose

__all__ = [
    "PAIRS",
    "PAIR_INDEX",
    "NAMES",
    "DUAL_NAMES",
    "TwoVector",
    "DualTwoVector",
    "wedge",
    "to_skew",
    "from_skew",
    "pfaffian",
    "pfaffian6",
    "pfaffian6_poly",
    "pfaffian4",
    "quadric_table",
    "signed_quadrics",
    "cremona_sign",
    "cremona_phi",
    "CremonaMismatch",
    "CremonaReport",
    "verify_cremona_identity",
    "rank_support",
    "LineMeetsGrassmannian",
    "LineNotInPfaffianCubic",
    "lagrangian_of_line",
    "QuadricData",
    "quadric_data_of_line",
    "adapted_basis",
    "contact_cone_matrix",
    "golden_tables_text",
    "parse_printed_tables",
    "two_by_two_minors",
    "cremona_phi_dual",
    "line_meets_grassmannian",
    "line_in_pfaffian_cubic",
    "GOLDEN_PATH",
    "PRINTED_PATH",
]

PAIRS = list(combinations(range(6), 2))
PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}
NAMES = [f"x{i}{j}" for i, j in PAIRS]
DUAL_NAMES = [f"y{i}{j}" for i, j in PAIRS]

_DATA = Path(__file__).with_name("data")
GOLDEN_PATH = _DATA / "golden_tables.txt"
PRINTED_PATH = _DATA / "printed_tables.txt"


def cremona_sign(i: int, j: int) -> int:
    """(-1)^(i+j-1)."""
    return -1 if (i + j - 1) % 2 else 1


@dataclass(frozen=True)
class TwoVector:
    """A 2-vector sum x_ij e_i^e_j, coordinates in lex order."""

    field: Field
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != 15:
            raise ValueError("a 2-vector has 15 coordinates")

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return self.field.zero
        if i < j:
            return self.coords[PAIR_INDEX[(i, j)]]
        return self.field.neg(self.coords[PAIR_INDEX[(j, i)]])

    def is_zero(self) -> bool:
        return all(c == self.field.zero for c in self.coords)

    def add(self, other: "TwoVector", scale=None) -> "TwoVector":
        F = self.field
        if scale is None:
            scale = F.one
        return type(self)(F, [F.add(a, F.mul(scale, b)) for a, b in zip(self.coords, other.coords)])

    def scale(self, c) -> "TwoVector":
        F = self.field
        return type(self)(F, [F.mul(c, a) for a in self.coords])


class DualTwoVector(TwoVector):
    """A 2-form sum y_ij e_i* ^ e_j*."""


def wedge(field: Field, u, v, cls=TwoVector) -> TwoVector:
    """u ^ v for two vectors of length 6."""
    F = field
    return cls(F, [F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i])) for i, j in PAIRS])


def to_skew(g: TwoVector) -> list[list]:
    F = g.field
    M = [[F.zero] * 6 for _ in range(6)]
    for (i, j), c in zip(PAIRS, g.coords):
        M[i][j] = c
        M[j][i] = F.neg(c)
    return M


def _check_skew(F: Field, M) -> None:
    n = len(M)
    for i in range(n):
        if M[i][i] != F.zero:
            raise ValueError("skew matrix has a nonzero diagonal entry")
        for j in range(i + 1, n):
            if M[j][i] != F.neg(M[i][j]):
                raise ValueError("matrix is not skew-symmetric")


def from_skew(field: Field, M, cls=TwoVector) -> TwoVector:
    _check_skew(field, M)
    return cls(field, [M[i][j] for i, j in PAIRS])


def _matchings(idx: tuple):
    """Perfect matchings of idx with their Pfaffian signs (first-row expansion)."""
    if not idx:
        yield 1, ()
        return
    a = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1 :]
        sign = 1 if k % 2 else -1
        for s, m in _matchings(rest):
            yield sign * s, ((a, idx[k]),) + m


_MATCH6 = list(_matchings(tuple(range(6))))


def pfaffian(F: Field, M, idx=None):
    """Pfaffian of the principal submatrix of a skew matrix on ``idx``."""
    idx = tuple(range(len(M))) if idx is None else tuple(idx)
    acc = F.zero
    for sign, m in (_MATCH6 if len(idx) == 6 and idx == tuple(range(6)) else _matchings(idx)):
        term = F.one
        for a, b in m:
            term = F.mul(term, M[a][b])
        acc = F.add(acc, term) if sign > 0 else F.sub(acc, term)
    return acc


def pfaffian6(F: Field, M):
    """The 6x6 Pfaffian by the 15-term perfect-matching sum."""
    if len(M) != 6:
        raise ValueError("expected a 6x6 matrix")
    _check_skew(F, M)
    return pfaffian(F, M)


def _complement(i: int, j: int) -> tuple:
    return tuple(k for k in range(6) if k not in (i, j))


def pfaffian4(F: Field, M, i: int, j: int):
    """Pfaffian of the 4x4 submatrix with rows and columns i and j deleted."""
    if not (0 <= i < j <= 5):
        raise IndexError("need 0 <= i < j <= 5")
    return pfaffian(F, M, _complement(i, j))


def _poly_pfaffian(field: Field, idx: tuple, names_index=PAIR_INDEX) -> Poly:
    terms = {}
    for sign, m in _matchings(idx):
        e = [0] * 15
        for a, b in m:
            e[names_index[(a, b)]] += 1
        terms[tuple(e)] = field.one if sign > 0 else field.neg(field.one)
    return Poly(field, 15, terms)


def pfaffian6_poly(field: Field = QQ) -> Poly:
    """m: the Pfaffian cubic in the 15 Plücker coordinates."""
    return _poly_pfaffian(field, tuple(range(6)))


def quadric_table(field: Field = QQ) -> dict:
    """The 15 quadrics q_ij, the 4x4 Pfaffians of the complementary indices."""
    return {(i, j): _poly_pfaffian(field, _complement(i, j)) for i, j in PAIRS}


def signed_quadrics(field: Field = QQ) -> list[Poly]:
    """(-1)^(i+j-1) q_ij in lex order; these are the partials of m."""
    table = quadric_table(field)
    out = []
    for i, j in PAIRS:
        q = table[(i, j)]
        out.append(q if cremona_sign(i, j) > 0 else -q)
    return out


def cremona_phi(g: TwoVector) -> DualTwoVector:
    """y_ij = (-1)^(i+j-1) q_ij(g), the coordinates of the 2-form g^g."""
    F = g.field
    M = to_skew(g)
    ys = []
    for i, j in PAIRS:
        v = pfaffian4(F, M, i, j)
        ys.append(v if cremona_sign(i, j) > 0 else F.neg(v))
    return DualTwoVector(F, ys)


def cremona_phi_dual(a: TwoVector) -> TwoVector:
    """The same quadric map read from the dual side back to 2-vectors."""
    y = cremona_phi(TwoVector(a.field, a.coords))
    return TwoVector(a.field, y.coords)


class CremonaMismatch(AssertionError):
    def __init__(self, pair, difference: Poly):
        super().__init__(f"identity fails for pair {pair}: difference {difference.to_text(NAMES)}")
        self.pair = pair
        self.difference = difference


@dataclass
class CremonaReport:
    pairs_checked: int
    unsigned_ok: bool
    signed_ok: bool
    euler_ok: bool
    partials_ok: bool
    spot_checks: int


def verify_cremona_identity(field: Field = QQ, spot_checks: int = 0, spot_field: Field | None = None, rng=None) -> CremonaReport:
    """Check the self-inverse identities of the quadric map as polynomials.

    Unsigned: q_ij(q_01, ..., q_45) = m x_ij.
    Signed:   with y_st = (-1)^(s+t-1) q_st, the map y composed with itself is m times the identity.
    Euler:    3m = sum (-1)^(i+j-1) x_ij q_ij.
    Raises :class:`CremonaMismatch` naming the first failing pair.
    """
    m = pfaffian6_poly(field)
    table = quadric_table(field)
    unsigned = [table[p] for p in PAIRS]
    signed = signed_quadrics(field)
    xs = [Poly.var(field, 15, k) for k in range(15)]
    for k, (i, j) in enumerate(PAIRS):
        lhs = compose(table[(i, j)], unsigned)
        diff = lhs - m * xs[k]
        if not diff.is_zero():
            raise CremonaMismatch((i, j), diff)
        ys = compose(signed[k], signed)
        diff = ys - m * xs[k]
        if not diff.is_zero():
            raise CremonaMismatch(("signed", i, j), diff)
        diff = m.diff(k) - signed[k]
        if not diff.is_zero():
            raise CremonaMismatch(("partial", i, j), diff)
    euler = Poly.zero(field, 15)
    for k in range(15):
        euler = euler + xs[k] * signed[k]
    diff = euler - m.scale(field.from_int(3))
    if not diff.is_zero():
        raise CremonaMismatch(("euler",), diff)
    done = 0
    if spot_checks:
        import random

        from .exactfield import GF

        T = spot_field or GF(10007)
        rng = rng or random.Random(0)
        for _ in range(spot_checks):
            g = TwoVector(T, [T.random(rng) for _ in range(15)])
            y = cremona_phi(g)
            yy = cremona_phi(TwoVector(T, y.coords))
            mg = pfaffian6(T, to_skew(g))
            if list(yy.coords) != [T.mul(mg, c) for c in g.coords]:
                raise CremonaMismatch(("spot", g.coords), Poly.zero(T, 15))
            s = T.zero
            for c, yc in zip(g.coords, y.coords):
                s = T.add(s, T.mul(c, yc))
            if s != T.mul(T.from_int(3), mg):
                raise CremonaMismatch(("spot-euler", g.coords), Poly.zero(T, 15))
            done += 1
    return CremonaReport(len(PAIRS), True, True, True, True, done)


def golden_tables_text(field: Field = QQ) -> str:
    """Canonical text of m followed by q_ij in lex order, one per line."""
    lines = ["m = " + pfaffian6_poly(field).to_text(NAMES)]
    for (i, j), q in quadric_table(field).items():
        lines.append(f"q{i}{j} = " + q.to_text(NAMES))
    return "\n".join(lines) + "\n"


def parse_printed_tables(text: str, field: Field = QQ) -> dict:
    """Parse the transcription file: lines 'name = a*b*c - d*e*f + ...'."""
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, rhs = (s.strip() for s in line.split("=", 1))
        rhs = rhs.replace("- ", "-").replace("+ ", "+")
        toks = []
        for tok in rhs.split():
            if tok[0] not in "+-":
                tok = "+" + tok
            sign, body = tok[0], tok[1:]
            toks.append(f"{sign}1*{body}")
        out[name] = Poly.parse(" ".join(toks), field, 15, NAMES)
    return out


# ---------------------------------------------------------------------------
# supports, kernels, Lagrangian spaces


def rank_support(g: TwoVector):
    """(rank, support, kernel) of the skew matrix of g.

    kernel is the null space of M(g); the support is its annihilator, which
    for a skew matrix is the row space.
    """
    if g.is_zero():
        raise ValueError("zero 2-vector has no support")
    F = g.field
    M = to_skew(g)
    kernel = Subspace.kernel(F, 6, M)
    support = Subspace.span(F, 6, M)
    return support.dim, support, kernel


class LineMeetsGrassmannian(ValueError):
    """Some point of the line has rank 2."""


class LineNotInPfaffianCubic(ValueError):
    """The Pfaffian cubic does not vanish identically on the line."""


def _line_quadric_coeffs(F: Field, g: TwoVector, h: TwoVector):
    # q(g + t h) = a + b t + c t^2, recovered from t = 0, 1, -1
    ms = [to_skew(g), to_skew(g.add(h)), to_skew(g.add(h, F.neg(F.one)))]
    half = F.inv(F.from_int(2))
    out = []
    for i, j in PAIRS:
        v0, v1, vm = (pfaffian4(F, M, i, j) for M in ms)
        b = F.mul(F.sub(v1, vm), half)
        c = F.sub(F.mul(F.add(v1, vm), half), v0)
        out.append(UniPoly(F, [v0, b, c]))
    return out


def line_meets_grassmannian(g: TwoVector, h: TwoVector) -> bool:
    """True when some point of span{g, h} (over the algebraic closure) has rank <= 2."""
    F = g.field
    if all(c == F.zero for c in cremona_phi(h).coords):
        return True
    polys = _line_quadric_coeffs(F, g, h)
    acc = UniPoly(F, [])
    for p in polys:
        acc = poly_gcd(acc, p) if not acc.is_zero() else p.monic()
    return acc.is_zero() or acc.degree > 0


def line_in_pfaffian_cubic(g: TwoVector, h: TwoVector) -> bool:
    F = g.field
    vals = []
    for t in range(4):
        vals.append(pfaffian6(F, to_skew(g.add(h, F.from_int(t)))))
    vals.append(pfaffian6(F, to_skew(h)))
    return all(v == F.zero for v in vals)


def lagrangian_of_line(g: TwoVector, h: TwoVector) -> Subspace:
    """The 4-space span(ker g, ker h), on which every point of the line vanishes."""
    F = g.field
    if not line_in_pfaffian_cubic(g, h):
        raise LineNotInPfaffianCubic("m does not vanish identically on the line")
    if line_meets_grassmannian(g, h):
        raise LineMeetsGrassmannian("the line meets the rank-2 locus")
    rg, _, kg = rank_support(g)
    rh, _, kh = rank_support(h)
    if rg != 4 or rh != 4:
        raise LineMeetsGrassmannian("endpoints must have rank 4")
    W = kg + kh
    if W.dim != 4:
        raise ValueError(f"kernel span has dimension {W.dim}, expected 4")
    for t in range(5):
        M = to_skew(g.add(h, F.from_int(t)))
        for u in W.basis:
            Mu = [F.sum(F.mul(M[i][j], u[j]) for j in range(6)) for i in range(6)]
            for v in W.basis:
                if F.sum(F.mul(a, b) for a, b in zip(v, Mu)) != F.zero:
                    raise AssertionError("kernel span is not isotropic for the line")
    return W


# ---------------------------------------------------------------------------
# the quadric surface attached to a line of 2-forms


_U_PAIRS = list(combinations(range(4), 2))


def _plucker4_polar(w, v, F: Field):
    # polarization of w01 w23 - w02 w13 + w03 w12 (coordinates in _U_PAIRS order)
    a01, a02, a03, a12, a13, a23 = w
    b01, b02, b03, b12, b13, b23 = v
    terms = [
        F.mul(a01, b23), F.mul(a23, b01),
        F.neg(F.mul(a02, b13)), F.neg(F.mul(a13, b02)),
        F.mul(a03, b12), F.mul(a12, b03),
    ]
    return F.sum(terms)


def _polar_row(v, F: Field):
    # the linear functional w -> B(w, v)
    b01, b02, b03, b12, b13, b23 = v
    return [b23, F.neg(b13), b12, b03, F.neg(b02), b01]


@dataclass
class QuadricData:
    """U (4-space of the 6-space), the polar 3-space P and the restricted quadric."""

    field: Field
    U: Subspace
    P: Subspace
    P_ambient: Subspace
    gram: list
    rank: int

    @property
    def kind(self) -> str:
        return {4: "secant", 3: "tangent"}.get(self.rank, "in-grassmannian")


def _wedge_coords_in(F: Field, alpha: TwoVector, Ubasis) -> list:
    """Coordinates of alpha in the basis u_a ^ u_b of the second exterior power of U."""
    cols = [wedge(F, Ubasis[a], Ubasis[b]).coords for a, b in _U_PAIRS]
    A = [[cols[c][r] for c in range(6)] for r in range(15)]
    from .linalg import solve

    sol = solve(F, A, list(alpha.coords))
    if sol is None:
        raise ValueError("2-form is not supported on U")
    return sol


def quadric_data_of_line(a1: TwoVector, a2: TwoVector) -> QuadricData:
    F = a1.field
    _, s1, _ = rank_support(a1)
    _, s2, _ = rank_support(a2)
    U = s1 + s2
    if U.dim != 4:
        raise ValueError(f"supports span a {U.dim}-space, expected 4")
    Ub = U.basis
    w1 = _wedge_coords_in(F, a1, Ub)
    w2 = _wedge_coords_in(F, a2, Ub)
    if rank(F, [w1, w2]) != 2:
        raise ValueError("the two 2-forms do not span a line")
    P = Subspace.kernel(F, 6, [_polar_row(w1, F), _polar_row(w2, F)])
    gram = [[_plucker4_polar(u, v, F) for v in P.basis] for u in P.basis]
    amb_cols = [wedge(F, Ub[a], Ub[b], DualTwoVector).coords for a, b in _U_PAIRS]
    amb = []
    for w in P.basis:
        amb.append([F.sum(F.mul(w[c], amb_cols[c][r]) for c in range(6)) for r in range(15)])
    return QuadricData(F, U, P, Subspace.span(F, 15, amb), gram, rank(F, gram))


# ---------------------------------------------------------------------------
# tangent spaces and contact cones at rank-2 points


def adapted_basis(g: TwoVector):
    """Columns b0..b5 with span{b0, b1} = |g| (rank-2 g), completed by unit vectors."""
    F = g.field
    r, support, _ = rank_support(g)
    if r != 2:
        raise ValueError(f"expected a rank-2 point, got rank {r}")
    cols = [list(v) for v in support.basis]
    for k in range(6):
        e = [F.one if i == k else F.zero for i in range(6)]
        if rank(F, cols + [e]) > len(cols):
            cols.append(e)
        if len(cols) == 6:
            break
    return [[cols[c][r] for c in range(6)] for r in range(6)]


def contact_cone_matrix(g: TwoVector):
    """Tangent space at a rank-2 point and the 2x4 matrix of linear forms N_g.

    With P the adapted basis, the new coordinates of h are
    x'_ab = sum_ij Pinv[a][i] Pinv[b][j] M(h)_ij.  The tangent space is
    x'_ab = 0 for 2 <= a < b <= 5 and N_g has rows (x'_02..x'_05), (x'_12..x'_15).
    Returns (tangent Subspace of the 15-space, N as a 2x4 list of Polys in 15 variables).
    """
    F = g.field
    P = adapted_basis(g)
    Pinv = inverse(F, P)

    def form(a, b):
        # coefficient of x_ij: Pinv[a][i] Pinv[b][j] - Pinv[a][j] Pinv[b][i]
        return [F.sub(F.mul(Pinv[a][i], Pinv[b][j]), F.mul(Pinv[a][j], Pinv[b][i])) for i, j in PAIRS]

    normals = [form(a, b) for a, b in combinations(range(2, 6), 2)]
    tangent = Subspace.kernel(F, 15, normals)
    N = [[Poly.linear(F, form(r, c)) for c in range(2, 6)] for r in range(2)]
    return tangent, N


def two_by_two_minors(N) -> list[Poly]:
    rows = len(N)
    cols = len(N[0])
    out = []
    for r1, r2 in combinations(range(rows), 2):
        for c1, c2 in combinations(range(cols), 2):
            out.append(N[r1][c1] * N[r2][c2] - N[r1][c2] * N[r2][c1])
    return out
