"""Exact dense linear algebra over any field from :mod:`vsp10.exactfield`.

Matrices are lists of row lists of bare field elements.  Prime fields take a
fast path with plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import Field, PrimeField, UniPoly

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "left_nullspace",
    "solve",
    "det",
    "inverse",
    "charpoly",
    "mat_mul",
    "mat_vec",
    "transpose",
    "Subspace",
]


def transpose(M):
    return [list(r) for r in zip(*M)] if M else []


def _rref_prime(M, p: int):
    R = [[x % p for x in row] for row in M]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(R)):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        row = [x * inv % p for x in R[r]]
        R[r] = row
        for i in range(len(R)):
            if i != r:
                f = R[i][c]
                if f:
                    R[i] = [(x - f * y) % p for x, y in zip(R[i], row)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rref(F: Field, M):
    """Reduced row echelon form and pivot columns."""
    if isinstance(F, PrimeField):
        return _rref_prime(M, F.p)
    R = [list(row) for row in M]
    if not R:
        return R, []
    zero = F.zero
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c] != zero), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        row = [F.mul(x, inv) for x in R[r]]
        R[r] = row
        for i in range(len(R)):
            if i != r:
                f = R[i][c]
                if f != zero:
                    R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], row)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(F: Field, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: Field, M, ncols: int | None = None):
    """Basis of {v : M v = 0}; ``ncols`` is needed when M has no rows."""
    if not M:
        n = ncols or 0
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    n = len(M[0])
    R, pivots = rref(F, M)
    pivset = set(pivots)
    basis = []
    for fc in range(n):
        if fc in pivset:
            continue
        v = [F.zero] * n
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][fc])
        basis.append(v)
    return basis


def left_nullspace(F: Field, M):
    """Basis of {w : w M = 0}."""
    return nullspace(F, transpose(M), len(M))


def solve(F: Field, A, b):
    """One solution of A x = b, or None if the system is inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    if n in pivots:
        return None
    x = [F.zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def det(F: Field, M):
    n = len(M)
    A = [list(r) for r in M]
    zero = F.zero
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != zero), None)
        if piv is None:
            return zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            f = A[i][c]
            if f != zero:
                f = F.mul(f, inv)
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    return d


def inverse(F: Field, M):
    n = len(M)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R[:n]]


def mat_mul(F: Field, A, B):
    Bt = transpose(B)
    out = []
    for row in A:
        out.append([F.sum(F.mul(a, b) for a, b in zip(row, col)) for col in Bt])
    return out


def mat_vec(F: Field, A, v):
    return [F.sum(F.mul(a, b) for a, b in zip(row, v)) for row in A]


def charpoly(F: Field, M) -> UniPoly:
    """det(t I - M) via reduction to upper Hessenberg form."""
    n = len(M)
    H = [list(r) for r in M]
    zero = F.zero
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if H[i][c] != zero), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[c + 1], H[piv] = H[piv], H[c + 1]
            for row in H:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        inv = F.inv(H[c + 1][c])
        for i in range(c + 2, n):
            f = H[i][c]
            if f == zero:
                continue
            f = F.mul(f, inv)
            # row_i -= f row_{c+1}, then column_{c+1} += f column_i
            H[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(H[i], H[c + 1])]
            for row in H:
                row[c + 1] = F.add(row[c + 1], F.mul(f, row[i]))
    # p_k(t) = (t - h_kk) p_{k-1} - sum_i h_ik prod_{i<j<=k} h_{j,j-1} p_{i-1}
    t = UniPoly.x(F)
    polys = [UniPoly.const(F, F.one)]
    for k in range(n):
        pk = (t - UniPoly.const(F, H[k][k])) * polys[k]
        prod = F.one
        for i in range(k - 1, -1, -1):
            prod = F.mul(prod, H[i + 1][i])
            if prod == zero:
                break
            pk = pk - polys[i].scale(F.mul(prod, H[i][k]))
        polys.append(pk)
    return polys[n]


@dataclass
class Subspace:
    """Subspace of F^n given by an RREF basis (rows)."""

    field: Field
    n: int
    basis: list
    pivots: list

    @classmethod
    def span(cls, F: Field, n: int, vectors) -> "Subspace":
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(F, n, [], [])
        R, piv = rref(F, vectors)
        return cls(F, n, R[: len(piv)], piv)

    @classmethod
    def kernel(cls, F: Field, n: int, rows) -> "Subspace":
        """{v : r . v = 0 for every r in rows}."""
        return cls.span(F, n, nullspace(F, [list(r) for r in rows], n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v):
        """Coordinates of v in the RREF basis, or None if v is not in the span."""
        F = self.field
        v = list(v)
        c = [v[p] for p in self.pivots]
        recon = [F.zero] * self.n
        for ci, row in zip(c, self.basis):
            if ci != F.zero:
                recon = [F.add(x, F.mul(ci, y)) for x, y in zip(recon, row)]
        return c if recon == v else None

    def contains(self, v) -> bool:
        return self.coords(v) is not None

    def annihilator(self) -> "Subspace":
        """The subspace of the dual space killing every vector here."""
        return Subspace.kernel(self.field, self.n, self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.n, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        ann = self.annihilator().basis + other.annihilator().basis
        return Subspace.kernel(self.field, self.n, ann)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)
