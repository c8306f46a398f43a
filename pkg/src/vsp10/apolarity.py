"""Apolarity for cubic forms in six variables.

Operators and forms are both :class:`~vsp10.multipoly.Poly` values in six
variables; an operator D acts on f by differentiation (``apply_diff``).
Degree-k spaces are coordinatized by ``monomials(6, k)`` (descending
degrevlex), so quadric operators live in a 21-dimensional space and cubics in
a 56-dimensional one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .exactfield import Field, common_field, embed
from .linalg import Subspace, nullspace, rank, solve
from .multipoly import Poly, apply_diff, cube, monomials

__all__ = [
    "NVARS",
    "Catalecticant",
    "ApolarProfile",
    "NotAPresentation",
    "DegenerateSocle",
    "PowerSumResult",
    "catalecticant",
    "apolar_profile",
    "dual_socle_generator",
    "powersum_certify",
    "terracini_matrix",
    "terracini_rank",
    "terracini_rank_from_ideal",
    "quadratic_relation_count",
    "poly_to_vector",
    "vector_to_poly",
    "quadric_space",
]

NVARS = 6


def _check_char(F: Field) -> None:
    if 0 < F.characteristic <= 3:
        raise ValueError("apolarity for cubics needs characteristic 0 or > 3")


def poly_to_vector(p: Poly, d: int) -> list:
    """Coefficients of a degree-d form in the monomials(n, d) basis."""
    return [p.coeff(e) for e in monomials(p.nvars, d)]


def vector_to_poly(F: Field, v, d: int, n: int = NVARS) -> Poly:
    return Poly(F, n, dict(zip(monomials(n, d), v)))


def quadric_space(polys) -> Subspace:
    """Span of quadrics as a subspace of the 21-dimensional coefficient space."""
    polys = list(polys)
    F = polys[0].field
    n = polys[0].nvars
    return Subspace.span(F, len(monomials(n, 2)), [poly_to_vector(p, 2) for p in polys])


@dataclass
class Catalecticant:
    k: int
    matrix: list
    rows: list
    cols: list

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.cols)


def catalecticant(f: Poly, k: int) -> Catalecticant:
    """Matrix of D -> D(f) from degree-k operators to degree-(3-k) forms."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    F, n = f.field, f.nvars
    _check_char(F)
    rows = monomials(n, 3 - k)
    cols = monomials(n, k)
    columns = []
    for a in cols:
        img = apply_diff(Poly.monomial(F, n, a), f)
        columns.append([img.coeff(b) for b in rows])
    matrix = [[columns[c][r] for c in range(len(cols))] for r in range(len(rows))]
    return Catalecticant(k, matrix, rows, cols)


@dataclass
class ApolarProfile:
    hilbert: tuple
    perp2: Subspace

    @property
    def perp2_polys(self) -> list:
        F = self.perp2.field
        return [vector_to_poly(F, v, 2) for v in self.perp2.basis]


def apolar_profile(f: Poly) -> ApolarProfile:
    """Hilbert function of T / f-perp and the degree-2 part of f-perp."""
    if f.is_zero() or not f.is_homogeneous() or f.degree != 3:
        raise ValueError("expected a nonzero cubic form")
    F = f.field
    c1 = catalecticant(f, 1)
    c2 = catalecticant(f, 2)
    h1 = rank(F, c1.matrix)
    h2 = rank(F, c2.matrix)
    perp = Subspace.span(F, len(c2.cols), nullspace(F, c2.matrix, len(c2.cols)))
    return ApolarProfile((1, h1, h2, 1), perp)


class DegenerateSocle(ValueError):
    def __init__(self, dim: int):
        super().__init__(f"annihilated cubics form a space of dimension {dim}, expected 1")
        self.dim = dim


def dual_socle_generator(Q) -> Poly:
    """The cubic killed by a 15-dimensional space of quadric operators.

    Normalized so that its first nonzero coefficient in degrevlex order is 1.
    """
    if not isinstance(Q, Subspace):
        Q = quadric_space(Q)
    F = Q.field
    _check_char(F)
    if Q.dim != 15:
        raise ValueError(f"expected 15 quadric operators, got {Q.dim}")
    n = NVARS
    cubics = monomials(n, 3)
    lin = monomials(n, 1)
    lin_index = {e: i for i, e in enumerate(lin)}
    quads = monomials(n, 2)
    # action of each quadric monomial on each cubic monomial
    action = {}
    for qi, a in enumerate(quads):
        for ci, b in enumerate(cubics):
            if all(x <= y for x, y in zip(a, b)):
                img = apply_diff(Poly.monomial(F, n, a), Poly.monomial(F, n, b))
                (e, c), = img.terms.items()
                action[(qi, ci)] = (lin_index[e], c)
    rows = []
    for D in Q.basis:
        block = [[F.zero] * len(cubics) for _ in range(n)]
        for qi, dq in enumerate(D):
            if dq == F.zero:
                continue
            for ci in range(len(cubics)):
                hit = action.get((qi, ci))
                if hit:
                    li, c = hit
                    block[li][ci] = F.add(block[li][ci], F.mul(dq, c))
        rows.extend(block)
    sol = nullspace(F, rows, len(cubics))
    if len(sol) != 1:
        raise DegenerateSocle(len(sol))
    v = sol[0]
    first = next(c for c in v if c != F.zero)
    inv = F.inv(first)
    return vector_to_poly(F, [F.mul(inv, c) for c in v], 3)


class NotAPresentation(ValueError):
    """The cubic is not a combination of the cubes of the given points."""


@dataclass
class PowerSumResult:
    field: Field
    lambdas: list
    exact: bool
    rank: int
    unique: bool


def _points_in(points, T: Field):
    out = []
    for P in points:
        if hasattr(P, "coords"):
            src, coords = P.field, P.coords
        else:
            src, coords = P
        out.append([embed(c, src, T) for c in coords])
    return out


def powersum_certify(points, f: Poly, target: Field | None = None) -> PowerSumResult:
    """Solve f = sum lambda_i l_i^3 exactly over a field holding every point.

    ``points`` are (field, coords) pairs or objects with ``field`` and
    ``coords``; l_i is the linear form with coefficient vector coords.
    """
    fields = [P.field if hasattr(P, "field") else P[0] for P in points] + [f.field]
    T = target or common_field(fields)
    _check_char(T)
    pts = _points_in(points, T)
    fT = f.map_field(T)
    cubes = [cube(Poly.linear(T, p)) for p in pts]
    mons = monomials(f.nvars, 3)
    A = [[c.coeff(e) for c in cubes] for e in mons]
    b = [fT.coeff(e) for e in mons]
    lam = solve(T, A, b)
    if lam is None:
        raise NotAPresentation("f is not in the span of the cubes")
    r = rank(T, A)
    resid = fT
    for li, c in zip(lam, cubes):
        resid = resid - c.scale(li)
    return PowerSumResult(T, lam, resid.is_zero(), r, r == len(pts))


def terracini_matrix(pts, T: Field) -> list:
    """Rows: d/dx_j of an unknown cubic at each point; columns: cubic monomials."""
    n = len(pts[0])
    mons = monomials(n, 3)
    rows = []
    for p in pts:
        for j in range(n):
            row = []
            for e in mons:
                if e[j] == 0:
                    row.append(T.zero)
                    continue
                v = T.from_int(e[j])
                for i, a in enumerate(e):
                    k = a - 1 if i == j else a
                    if k:
                        v = T.mul(v, T.pow(p[i], k))
                row.append(v)
            rows.append(row)
    return rows


def terracini_rank(points, target: Field | None = None, orbits: bool = False) -> int:
    """Rank of the conditions 'all first partials of a cubic vanish at each point'.

    With ``orbits=True`` each point stands for its whole Galois orbit over the
    prime field.  The conditions of an orbit are Frobenius-stable, so their
    kernel is spanned by prime-field cubics: expanding each condition into its
    prime-field coordinates gives the same rank without a compositum.
    """
    if not orbits:
        fields = [P.field if hasattr(P, "field") else P[0] for P in points]
        T = target or common_field(fields)
        pts = _points_in(points, T)
        return rank(T, terracini_matrix(pts, T))
    rows = []
    base = None
    for P in points:
        E, coords = (P.field, P.coords) if hasattr(P, "field") else P
        base = E.prime_subfield
        for row in terracini_matrix([list(coords)], E):
            if E.degree == 1:
                rows.append(list(row))
            else:
                for k in range(E.degree):
                    rows.append([c[k] for c in row])
    return rank(base, rows)


def terracini_rank_from_ideal(G) -> int:
    """The same rank computed from a basis of the radical saturated ideal of the points.

    A cubic C is singular along the points iff every partial of C lies in the
    degree-2 part of the ideal, i.e. has zero normal form.  Works over any
    field, including the rationals, without solving for the points.
    """
    from .groebner import normal_form

    F, n = G.field, G.nvars
    mons3 = monomials(n, 3)
    cols = []
    for e in mons3:
        col = {}
        C = Poly.monomial(F, n, e)
        for j in range(n):
            r = normal_form(C.diff(j), G)
            for m, c in r.terms.items():
                col[(j, m)] = c
        cols.append(col)
    keys = sorted({k for col in cols for k in col})
    matrix = [[col.get(k, F.zero) for col in cols] for k in keys]
    if not matrix:
        return 0
    return rank(F, matrix)


def quadratic_relation_count(Q) -> int:
    """dim of the kernel of Sym^2(Q) -> quartics, for a 15-dim quadric space Q."""
    if not isinstance(Q, Subspace):
        Q = quadric_space(Q)
    if Q.dim != 15:
        raise ValueError(f"expected 15 quadrics, got {Q.dim}")
    F = Q.field
    polys = [vector_to_poly(F, v, 2) for v in Q.basis]
    prods = [a * b for a, b in combinations_with_replacement(polys, 2)]
    mons4 = monomials(NVARS, 4)
    M = [[p.coeff(e) for e in mons4] for p in prods]
    return len(prods) - rank(F, M)
