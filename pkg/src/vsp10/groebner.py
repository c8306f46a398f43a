"""Groebner bases of homogeneous ideals, Hilbert data and a zero-dimensional solver.

The engine works with degrevlex (x0 > x1 > ... > x(n-1)).  Monomials are
packed into one integer, 8 bits per variable with x_i at bit offset 8i.  For
monomials of equal degree, a larger degrevlex monomial has a *smaller* packed
value, so the lead term of a homogeneous polynomial is its minimal key.
Multiplying monomials adds keys and m | k iff (k - m) has no guard bit set.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .exactfield import Field, PrimeField, UniPoly, ExtensionField, factor_univariate, embed
from .linalg import charpoly, left_nullspace
from .multipoly import Poly, compose, monomials

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "HilbertData",
    "ZeroDimSolution",
    "SolvedPoint",
    "NotStabilized",
    "SolverError",
    "buchberger",
    "normal_form",
    "hilbert",
    "hilbert_numerator",
    "is_projectively_empty",
    "saturate_by_linear",
    "solve_zero_dim",
    "change_chart",
    "affine_multiplication",
]

BITS = 8
MAXEXP = 1 << (BITS - 1)


def _guard(n: int) -> int:
    g = 0
    for i in range(n):
        g |= MAXEXP << (BITS * i)
    return g


def encode(e) -> int:
    k = 0
    for i, a in enumerate(e):
        if a >= MAXEXP:
            raise OverflowError("exponent too large for the packed monomial encoding")
        k |= a << (BITS * i)
    return k


def decode(k: int, n: int) -> tuple:
    mask = (1 << BITS) - 1
    return tuple((k >> (BITS * i)) & mask for i in range(n))


def _lcm(a: int, b: int, n: int) -> int:
    mask = (1 << BITS) - 1
    out = 0
    for i in range(n):
        s = BITS * i
        x = (a >> s) & mask
        y = (b >> s) & mask
        out |= (x if x > y else y) << s
    return out


class NotStabilized(RuntimeError):
    """Hilbert differences did not stabilize by the requested degree."""


class SolverError(RuntimeError):
    """The zero-dimensional solver could not account for every point."""


@dataclass
class _GBPoly:
    key: int
    deg: int
    terms: list  # [(key, coeff)] sorted by key ascending; terms[0] is the monic lead


class _Engine:
    """Working state of one Buchberger run."""

    def __init__(self, F: Field, n: int):
        self.F = F
        self.n = n
        self.guard = _guard(n)
        self.prime = F.p if isinstance(F, PrimeField) else None
        self.basis: list[_GBPoly] = []
        self._cache: dict[int, tuple] = {}

    def _reducer(self, k: int):
        hit = self._cache.get(k)
        start = 0
        if hit is not None:
            if hit[0] is not None:
                return hit[0]
            start = hit[1]
        guard = self.guard
        basis = self.basis
        for idx in range(start, len(basis)):
            g = basis[idx]
            if not ((k - g.key) & guard):
                self._cache[k] = (g, idx)
                return g
        self._cache[k] = (None, len(basis))
        return None

    def reduce(self, f: dict, full: bool = True) -> dict:
        """Reduce a homogeneous {key: coeff} polynomial; returns the remainder."""
        heap = list(f)
        heapq.heapify(heap)
        out = {}
        p = self.prime
        F = self.F
        zero = F.zero
        while heap:
            k = heapq.heappop(heap)
            c = f.pop(k, zero)
            if c == zero:
                continue
            g = self._reducer(k)
            if g is None:
                out[k] = c
                if not full:
                    for k2 in heap:
                        v = f.pop(k2, zero)
                        if v != zero:
                            out[k2] = v
                    return out
                continue
            shift = k - g.key
            it = iter(g.terms)
            next(it)
            if p is not None:
                for e, bc in it:
                    key = e + shift
                    v = f.get(key)
                    if v is None:
                        f[key] = (-c * bc) % p
                        heapq.heappush(heap, key)
                    else:
                        f[key] = (v - c * bc) % p
            else:
                for e, bc in it:
                    key = e + shift
                    v = f.get(key)
                    if v is None:
                        f[key] = F.neg(F.mul(c, bc))
                        heapq.heappush(heap, key)
                    else:
                        f[key] = F.sub(v, F.mul(c, bc))
        return out

    def make(self, f: dict) -> _GBPoly:
        F = self.F
        items = sorted(f.items())
        lead, lc = items[0]
        if lc != F.one:
            if self.prime is not None:
                p = self.prime
                inv = pow(lc, -1, p)
                items = [(k, c * inv % p) for k, c in items]
            else:
                inv = F.inv(lc)
                items = [(k, F.mul(c, inv)) for k, c in items]
        deg = sum(decode(lead, self.n))
        return _GBPoly(lead, deg, items)

    def spoly(self, g1: _GBPoly, g2: _GBPoly, lcm: int) -> dict:
        F = self.F
        s1 = lcm - g1.key
        s2 = lcm - g2.key
        out = {}
        for k, c in g1.terms[1:]:
            out[k + s1] = c
        p = self.prime
        for k, c in g2.terms[1:]:
            key = k + s2
            v = out.get(key)
            if p is not None:
                out[key] = ((v or 0) - c) % p
            else:
                out[key] = F.sub(v if v is not None else F.zero, c)
        zero = F.zero
        return {k: c for k, c in out.items() if c != zero}


def _to_keys(poly: Poly) -> dict:
    return {encode(e): c for e, c in poly.terms.items()}


def _from_keys(F: Field, n: int, terms) -> Poly:
    return Poly(F, n, {decode(k, n): c for k, c in terms})


@dataclass
class Ideal:
    """A homogeneous ideal given by generators; the basis is cached on demand."""

    field: Field
    nvars: int
    gens: list
    names: list | None = None
    _gb: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.gens = [g for g in self.gens if not g.is_zero()]
        for g in self.gens:
            if g.nvars != self.nvars or g.field != self.field:
                raise ValueError("generator lives in a different ring")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")

    def groebner(self, max_degree: int | None = None) -> "GroebnerBasis":
        if None in self._gb:
            return self._gb[None]
        if max_degree not in self._gb:
            G = buchberger(self, max_degree=max_degree)
            self._gb[None if G.complete else max_degree] = G
            return G
        return self._gb[max_degree]

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.field, self.nvars, list(self.gens) + list(other.gens), self.names)


@dataclass
class GroebnerBasis:
    field: Field
    nvars: int
    polys: list
    complete: bool
    max_degree: int | None = None
    names: list | None = None

    @property
    def leads(self) -> list[tuple]:
        return [p.lead()[0] for p in self.polys]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and _canon(self.polys) == _canon(other.polys)

    def to_text(self) -> list[str]:
        return [p.to_text(self.names) for p in self.polys]

    def ideal(self) -> Ideal:
        return Ideal(self.field, self.nvars, list(self.polys), self.names)


def _canon(polys):
    return sorted((tuple(sorted(p.terms.items())) for p in polys))


def buchberger(I, max_degree: int | None = None) -> GroebnerBasis:
    """Reduced degrevlex basis of a homogeneous ideal.

    Pairs are processed by degree with the Gebauer-Moeller criteria.  With
    ``max_degree`` the run stops after that degree and the basis is marked
    incomplete if any pair or generator was left over.
    """
    if isinstance(I, GroebnerBasis):
        I = I.ideal()
    F, n = I.field, I.nvars
    eng = _Engine(F, n)
    pending_gens: dict[int, list] = {}
    for g in I.gens:
        pending_gens.setdefault(g.degree, []).append(_to_keys(g))
    pairs: list = []  # (deg, lcm, i, j)
    leads: list[int] = []
    active: list[int] = []

    def update(h_idx: int):
        nonlocal pairs, active
        h = eng.basis[h_idx].key
        C = [(i, _lcm(leads[i], h, n)) for i in active]
        D = []
        guard = eng.guard
        while C:
            i, lc = C.pop()
            disjoint = lc == leads[i] + h
            if disjoint or not any(not ((lc - l2) & guard) for _, l2 in C + D):
                D.append((i, lc))
        E = [(i, lc) for i, lc in D if lc != leads[i] + h]
        kept = []
        for deg, lc, i, j in pairs:
            if not ((lc - h) & guard):
                if _lcm(leads[i], h, n) != lc and _lcm(leads[j], h, n) != lc:
                    continue
            kept.append((deg, lc, i, j))
        for i, lc in E:
            kept.append((sum(decode(lc, n)), lc, i, h_idx))
        pairs = kept
        active = [i for i in active if (leads[i] - h) & guard] + [h_idx]

    complete = True
    while True:
        next_pair_deg = min((p[0] for p in pairs), default=None)
        next_gen_deg = min(pending_gens, default=None)
        cands = [d for d in (next_pair_deg, next_gen_deg) if d is not None]
        if not cands:
            break
        d = min(cands)
        if max_degree is not None and d > max_degree:
            complete = False
            break
        todo = [p for p in pairs if p[0] == d]
        pairs = [p for p in pairs if p[0] != d]
        todo.sort(key=lambda p: (-p[1], p[2], p[3]))
        polys = [eng.spoly(eng.basis[i], eng.basis[j], lc) for _, lc, i, j in todo]
        polys.extend(pending_gens.pop(d, []))
        for f in polys:
            r = eng.reduce(dict(f))
            if r:
                g = eng.make(r)
                eng.basis.append(g)
                leads.append(g.key)
                update(len(eng.basis) - 1)
    # leads are already minimal; tail-reduce each element by the others
    final = list(eng.basis)
    red = _Engine(F, n)
    red.basis = final
    out = []
    for g in final:
        others = [h for h in final if h is not g]
        red.basis = others
        red._cache = {}
        tail = dict(g.terms[1:])
        r = red.reduce(tail)
        terms = {g.key: F.one}
        terms.update(r)
        out.append(_from_keys(F, n, terms.items()))
    out.sort(key=lambda p: (p.degree, _lead_sort(p)))
    return GroebnerBasis(F, n, out, complete, max_degree, I.names)


def _lead_sort(p: Poly):
    return encode(p.lead()[0])


def _engine_for(G: GroebnerBasis) -> _Engine:
    eng = _Engine(G.field, G.nvars)
    for p in G.polys:
        eng.basis.append(eng.make(_to_keys(p)))
    return eng


def normal_form(p: Poly, G: GroebnerBasis) -> Poly:
    """Remainder of p modulo the basis (zero iff p lies in the ideal)."""
    if p.nvars != G.nvars or p.field != G.field:
        raise ValueError("polynomial lives in a different ring")
    eng = _engine_for(G)
    out = {}
    for d in sorted({sum(e) for e in p.terms}):
        r = eng.reduce(_to_keys(p.homogeneous_part(d)))
        out.update(r)
    return _from_keys(G.field, G.nvars, out.items())


# ---------------------------------------------------------------------------
# Hilbert series


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _padd(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def hilbert_numerator(gens, n: int) -> list[int]:
    """N(t) with HS(S/M) = N(t) / (1-t)^n for the monomial ideal M = (gens)."""
    gens = _minimalize([tuple(g) for g in gens])
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    counts = [0] * n
    for g in gens:
        for i, a in enumerate(g):
            if a:
                counts[i] += 1
    x = max(range(n), key=lambda i: counts[i])
    if counts[x] <= 1:
        # pairwise coprime generators
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    exps = sorted(g[x] for g in gens if g[x])
    pure = [g[x] for g in gens if g[x] and sum(g) == g[x]]
    e = exps[len(exps) // 2]
    if pure:
        e = min(e, pure[0] - 1)
    e = max(e, 1)
    pivot = tuple(e if i == x else 0 for i in range(n))
    plus = hilbert_numerator(gens + [pivot], n)
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    rest = hilbert_numerator(colon, n)
    return _padd(plus, [0] * e + rest)


def _strip(N: list) -> list:
    while N and N[-1] == 0:
        N.pop()
    return N


def _reduce_series(N: list, n: int) -> tuple[list, int]:
    """Divide out (1-t) factors: returns (numerator, Krull dimension)."""
    N = _strip(list(N))
    while n > 0 and N and sum(N) == 0:
        # synthetic division by (1 - t)
        q = []
        acc = 0
        for c in N[:-1]:
            acc += c
            q.append(acc)
        N = _strip(q)
        n -= 1
    return N, n


def _series_value(N: list, n: int, d: int) -> int:
    if n == 0:
        return N[d] if d < len(N) else 0
    return sum(c * comb(d - k + n - 1, n - 1) for k, c in enumerate(N) if d - k >= 0)


@dataclass
class HilbertData:
    values: list
    dim: int | None
    degree: int | None
    stabilized: bool
    exact: bool
    numerator: list | None = None

    @property
    def length(self) -> int | None:
        return self.degree if self.dim == 0 else None


def _difference(seq: list) -> list:
    return [b - a for a, b in zip(seq, seq[1:])]


def _heuristic(values: list):
    """Projective dim and degree: the first difference vanishing at the last 3 degrees."""
    diffs = list(values)
    prev = None
    for k in range(len(values)):
        if len(diffs) < 3:
            return None
        if all(v == 0 for v in diffs[-3:]):
            return (-1, 0) if k == 0 else (k - 1, prev[-1])
        prev, diffs = diffs, _difference(diffs)
    return None


def hilbert(G, D: int = 12) -> HilbertData:
    """Hilbert function h(0..D) and projective dimension and degree.

    h(d) comes from the lead-term staircase.  For a complete basis the
    Hilbert polynomial is read off the reduced series; otherwise dimension and
    degree are reported only when the finite differences stabilize.
    """
    if isinstance(G, Ideal):
        G = G.groebner()
    n = G.nvars
    N = hilbert_numerator(G.leads, n)
    values = [_series_value(N, n, d) for d in range(D + 1)]
    if G.complete:
        Nr, k = _reduce_series(N, n)
        if not Nr:
            return HilbertData(values, -1, 0, True, True, N)
        return HilbertData(values, k - 1, sum(Nr), True, True, N)
    valid = values[: (G.max_degree or D) + 1] if G.max_degree is not None else values
    h = _heuristic(valid)
    if h is None:
        return HilbertData(values, None, None, False, False, N)
    return HilbertData(values, h[0], h[1], True, False, N)


def is_projectively_empty(G) -> bool:
    """True iff the ideal contains a power of the irrelevant ideal."""
    if isinstance(G, Ideal):
        G = G.groebner()
    n = G.nvars
    pure = set()
    for e in G.leads:
        nz = [i for i, a in enumerate(e) if a]
        if len(nz) == 1:
            pure.add(nz[0])
        elif not nz:
            return True
    if len(pure) == n:
        return True
    if not G.complete:
        N = hilbert_numerator(G.leads, n)
        return _series_value(N, n, G.max_degree or 0) == 0
    return False


# ---------------------------------------------------------------------------
# coordinate changes, saturation and solving


@dataclass
class ChartChange:
    """Substitution x = A(t) making a linear form the last coordinate t_(n-1)."""

    field: Field
    n: int
    coeffs: tuple
    pivot: int
    order: list  # original indices placed at t_0..t_(n-2)

    def forward_images(self) -> list[Poly]:
        """Polys in t giving each x_i."""
        F, n = self.field, self.n
        images = [None] * n
        for pos, i in enumerate(self.order):
            images[i] = Poly.var(F, n, pos)
        inv = F.inv(self.coeffs[self.pivot])
        lin = [F.zero] * n
        lin[n - 1] = inv
        for pos, i in enumerate(self.order):
            c = self.coeffs[i]
            if c != F.zero:
                lin[pos] = F.neg(F.mul(c, inv))
        images[self.pivot] = Poly.linear(F, lin)
        return images

    def backward_images(self) -> list[Poly]:
        """Polys in x giving each t_k."""
        F, n = self.field, self.n
        out = [Poly.var(F, n, i) for i in self.order]
        out.append(Poly.linear(F, list(self.coeffs)))
        return out

    def to_original(self, t, target: Field):
        """Original coordinates of a point given in t coordinates."""
        n = self.n
        x = [None] * n
        for pos, i in enumerate(self.order):
            x[i] = t[pos]
        acc = t[n - 1]
        for i in self.order:
            c = self.coeffs[i]
            if c != self.field.zero:
                acc = target.sub(acc, target.mul(embed(c, self.field, target), x[i]))
        x[self.pivot] = target.mul(acc, embed(self.field.inv(self.coeffs[self.pivot]), self.field, target))
        return x


def change_chart(F: Field, coeffs) -> ChartChange:
    n = len(coeffs)
    nz = [i for i, c in enumerate(coeffs) if c != F.zero]
    if not nz:
        raise ValueError("chart form is zero")
    pivot = nz[-1]
    order = [i for i in range(n) if i != pivot]
    return ChartChange(F, n, tuple(coeffs), pivot, order)


def _transform(polys, images) -> list[Poly]:
    return [compose(p, images) for p in polys]


def _saturated_basis(G: GroebnerBasis) -> GroebnerBasis:
    """Bayer-Stillman: divide a revlex basis by powers of the last variable."""
    n = G.nvars
    out = []
    for p in G.polys:
        k = min(e[n - 1] for e in p.terms)
        if k:
            p = Poly(p.field, n, {e[:-1] + (e[-1] - k,): c for e, c in p.terms.items()})
        out.append(p)
    return buchberger(Ideal(G.field, n, out, G.names))


def saturate_by_linear(I, ell) -> Ideal:
    """The saturation I : ell^infinity, returned with a reduced basis cached."""
    if isinstance(I, GroebnerBasis):
        I = I.ideal()
    F, n = I.field, I.nvars
    coeffs = list(ell.coeffs) if hasattr(ell, "coeffs") else list(ell)
    ch = change_chart(F, coeffs)
    gens_t = _transform(I.gens, ch.forward_images())
    Gt = buchberger(Ideal(F, n, gens_t))
    St = _saturated_basis(Gt)
    back = _transform(St.polys, ch.backward_images())
    J = Ideal(F, n, back, I.names)
    J.groebner()
    return J


@dataclass
class SolvedPoint:
    field: Field
    coords: list
    degree: int
    multiplicity: int
    factor: UniPoly


@dataclass
class ZeroDimSolution:
    length: int
    points: list
    complete: bool
    charts_tried: int = 1

    @property
    def total(self) -> int:
        return sum(p.degree * p.multiplicity for p in self.points)

    @property
    def reduced(self) -> bool:
        return all(p.multiplicity == 1 for p in self.points)


def _affine_standard(G: GroebnerBasis, limit: int):
    """Standard monomials of the dehomogenized ideal (last variable set to 1)."""
    n = G.nvars
    leads = [e for e in G.leads]
    if any(e[-1] for e in leads):
        return None
    start = (0,) * n
    seen = {start}
    frontier = [start]
    out = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n - 1):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e in seen:
                    continue
                seen.add(e)
                if any(all(a <= b for a, b in zip(l, e)) for l in leads):
                    continue
                out.append(e)
                nxt.append(e)
                if len(out) > limit:
                    return out
        frontier = nxt
    return out


class _AffineNF:
    """Normal forms in the affine quotient, coordinates in a standard basis."""

    def __init__(self, G: GroebnerBasis, std: list):
        self.G = G
        self.eng = _engine_for(G)
        self.index = {m[:-1]: k for k, m in enumerate(std)}
        self.n = G.nvars
        self.F = G.field

    def coords_of_monomial(self, e: tuple) -> list:
        F = self.F
        r = self.eng.reduce({encode(e + (0,)): F.one})
        v = [F.zero] * len(self.index)
        for k, c in r.items():
            ee = decode(k, self.n)[:-1]
            v[self.index[ee]] = F.add(v[self.index[ee]], c)
        return v


def solve_zero_dim(G, chart=None, rng: random.Random | None = None, retries: int = 5, length: int | None = None) -> ZeroDimSolution:
    """Points of a zero-dimensional projective scheme over a prime field.

    The scheme is moved so the chart form becomes the last coordinate,
    saturated, and dehomogenized.  A random multiplication matrix is
    diagonalized over the residue fields of its characteristic polynomial and
    each point is read off a left eigenvector.  Every point is checked against
    the input generators.
    """
    if isinstance(G, Ideal):
        gens = list(G.gens)
        G = G.groebner()
    else:
        gens = list(G.polys)
    F, n = G.field, G.nvars
    if not isinstance(F, PrimeField):
        raise ValueError("solver works over prime fields")
    hd = hilbert(G)
    if hd.dim != 0:
        raise ValueError(f"scheme is not zero-dimensional (projective dimension {hd.dim})")
    L = hd.degree if length is None else length
    rng = rng or random.Random(0)
    charts = []
    if chart is not None:
        charts.append(list(chart.coeffs) if hasattr(chart, "coeffs") else list(chart))
    tries = 0
    last_reason = ""
    while tries <= retries:
        coeffs = charts.pop(0) if charts else [F.random(rng) for _ in range(n)]
        tries += 1
        try:
            ch = change_chart(F, coeffs)
        except ValueError:
            continue
        Gt = buchberger(Ideal(F, n, _transform(G.polys, ch.forward_images())))
        St = _saturated_basis(Gt)
        std = _affine_standard(St, L)
        if std is None or len(std) != L:
            last_reason = f"chart misses {L - (len(std) if std else 0)} points"
            continue
        try:
            pts = _extract_points(St, std, ch, rng)
        except SolverError as exc:
            last_reason = str(exc)
            continue
        for pt in pts:
            for g in gens:
                if g.evaluate(pt.coords, pt.field) != pt.field.zero:
                    raise SolverError("solved point fails a generator")
        sol = ZeroDimSolution(L, pts, sum(p.degree * p.multiplicity for p in pts) == L, tries)
        return sol
    raise SolverError(f"no chart accounted for all points after {tries} tries: {last_reason}")


def _variable_matrices(nf: _AffineNF, std: list) -> list:
    L = len(std)
    mats = []
    for i in range(nf.n - 1):
        cols = []
        for m in std:
            e = list(m[:-1])
            e[i] += 1
            cols.append(nf.coords_of_monomial(tuple(e)))
        mats.append([[cols[c][r] for c in range(L)] for r in range(L)])
    return mats


def affine_multiplication(G, chart, weights):
    """Multiplication by sum weights_i t_i on the affine quotient of a chart.

    Works over any field.  Returns (standard monomials, matrix, charpoly);
    the scheme is reduced on the chart iff the charpoly of a generic
    multiplication matrix is squarefree.
    """
    if isinstance(G, Ideal):
        G = G.groebner()
    F, n = G.field, G.nvars
    ch = change_chart(F, list(chart))
    Gt = buchberger(Ideal(F, n, _transform(G.polys, ch.forward_images())))
    St = _saturated_basis(Gt)
    std = _affine_standard(St, 10**6)
    if std is None:
        raise ValueError("affine quotient is infinite")
    nf = _AffineNF(St, std)
    mats = _variable_matrices(nf, std)
    L = len(std)
    M = [[F.sum(F.mul(weights[i], mats[i][r][c]) for i in range(n - 1)) for c in range(L)] for r in range(L)]
    return std, M, charpoly(F, M)


def _extract_points(St: GroebnerBasis, std: list, ch: ChartChange, rng: random.Random) -> list:
    F, n = St.field, St.nvars
    L = len(std)
    nf = _AffineNF(St, std)
    var_mats = _variable_matrices(nf, std)
    for attempt in range(6):
        u = [F.random(rng) for _ in range(n - 1)]
        M = [[F.sum(F.mul(u[i], var_mats[i][r][c]) for i in range(n - 1)) for c in range(L)] for r in range(L)]
        chi = charpoly(F, M)
        factors = factor_univariate(chi)
        points = []
        ok = True
        for phi, mult in factors:
            E = F if phi.degree == 1 else ExtensionField(F.p, phi.coeffs, check=False)
            lam = F.neg(phi.coeffs[0]) if phi.degree == 1 else E.gen
            ME = [[embed(x, F, E) for x in row] for row in M]
            for r in range(L):
                ME[r][r] = E.sub(ME[r][r], lam)
            left = left_nullspace(E, ME)
            if len(left) != 1:
                ok = False
                break
            w = left[0]
            one_idx = nf.index[(0,) * (n - 1)]
            if w[one_idx] == E.zero:
                ok = False
                break
            inv = E.inv(w[one_idx])
            w = [E.mul(inv, x) for x in w]
            t = []
            for i in range(n - 1):
                e = [0] * (n - 1)
                e[i] = 1
                v = nf.coords_of_monomial(tuple(e))
                acc = E.zero
                for c, wi in zip(v, w):
                    if c != F.zero:
                        acc = E.add(acc, E.mul(embed(c, F, E), wi))
                t.append(acc)
            t.append(E.one)
            points.append(SolvedPoint(E, ch.to_original(t, E), phi.degree, mult, phi))
        if ok:
            return points
    raise SolverError("eigenvectors did not separate the points")
