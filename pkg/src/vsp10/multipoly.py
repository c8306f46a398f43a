"""Sparse exact multivariate polynomials.

A :class:`Poly` maps exponent tuples to nonzero field elements.  Iteration and
text output use degrevlex with x0 > x1 > ... > x(n-1), the same order the
Groebner engine uses.  Polynomials are treated as immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb, factorial

from .exactfield import Field, embed

__all__ = [
    "Poly",
    "LinForm",
    "degrevlex_key",
    "monomials",
    "restrict_linear",
    "compose",
    "apply_diff",
    "cube",
    "default_names",
]


def degrevlex_key(e: tuple) -> tuple:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)]


def monomials(n: int, d: int) -> list[tuple]:
    """All exponent vectors of total degree d in n variables, descending degrevlex."""
    out = []

    def rec(prefix, left, k):
        if k == n - 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, k + 1)

    if n == 0:
        return [()] if d == 0 else []
    rec((), d, 0)
    out.sort(key=degrevlex_key, reverse=True)
    return out


class Poly:
    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        zero = field.zero
        if terms is None:
            self.terms = {}
        else:
            self.terms = {e: c for e, c in dict(terms).items() if c != zero}
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Poly":
        return cls(field, nvars)

    @classmethod
    def const(cls, field: Field, nvars: int, c) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, field: Field, nvars: int) -> "Poly":
        return cls.const(field, nvars, field.one)

    @classmethod
    def var(cls, field: Field, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field: Field, nvars: int, e, c=None) -> "Poly":
        return cls(field, nvars, {tuple(e): field.one if c is None else c})

    @classmethod
    def linear(cls, field: Field, coeffs) -> "Poly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(field, n, terms)

    # basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def lead(self) -> tuple:
        """(exponent, coefficient) of the degrevlex-largest term."""
        e = max(self.terms, key=degrevlex_key)
        return e, self.terms[e]

    def coeff(self, e):
        return self.terms.get(tuple(e), self.field.zero)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.field, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                out[e] = F.add(out[e], c)
            else:
                out[e] = c
        return Poly(F, self.nvars, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                out[e] = F.sub(out[e], c)
            else:
                out[e] = F.neg(c)
        return Poly(F, self.nvars, out)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        F = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = F.mul(c1, c2)
                if e in out:
                    out[e] = F.add(out[e], c)
                else:
                    out[e] = c
        return Poly(F, self.nvars, out)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        F = self.field
        if c == F.zero:
            return Poly(F, self.nvars)
        return Poly(F, self.nvars, {e: F.mul(c, v) for e, v in self.terms.items()})

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lead()[1]))

    def mul_monomial(self, m: tuple, c=None) -> "Poly":
        F = self.field
        terms = {tuple(a + b for a, b in zip(e, m)): v for e, v in self.terms.items()}
        p = Poly(F, self.nvars, terms)
        return p if c is None else p.scale(c)

    def diff(self, i: int) -> "Poly":
        """Formal partial derivative with respect to x_i."""
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = F.mul(F.from_int(e[i]), c)
        return Poly(F, self.nvars, out)

    # evaluation and coefficient maps -----------------------------------
    def evaluate(self, point, target: Field | None = None):
        """Value at ``point``; entries may live in an extension ``target``."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        F = self.field
        T = F if target is None else target
        pows = [{0: T.one} for _ in range(self.nvars)]

        def power(i, k):
            cache = pows[i]
            if k not in cache:
                cache[k] = T.pow(point[i], k)
            return cache[k]

        acc = T.zero
        for e, c in self.terms.items():
            term = c if T is F else embed(c, F, T)
            for i, k in enumerate(e):
                if k:
                    term = T.mul(term, power(i, k))
            acc = T.add(acc, term)
        return acc

    def map_field(self, target: Field) -> "Poly":
        """Image of the coefficients under the fixed map into ``target``."""
        F = self.field
        return Poly(target, self.nvars, {e: embed(c, F, target) for e, c in self.terms.items()})

    def rename(self, nvars: int, positions) -> "Poly":
        """Place variable i at position positions[i] of a ring with nvars variables."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return Poly(self.field, nvars, out)

    # text -------------------------------------------------------------
    def to_text(self, names=None) -> str:
        """Canonical text: degrevlex-descending signed terms, explicit coefficients."""
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        F = self.field
        parts = []
        for e, c in self.sorted_terms():
            cs = F.format(c)
            if not cs.startswith("-"):
                cs = "+" + cs
            mon = []
            for i, k in enumerate(e):
                if k == 1:
                    mon.append(names[i])
                elif k > 1:
                    mon.append(f"{names[i]}^{k}")
            parts.append("*".join([cs] + mon))
        return " ".join(parts)

    def __repr__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, field: Field, nvars: int, names=None) -> "Poly":
        names = names or default_names(nvars)
        index = {nm: i for i, nm in enumerate(names)}
        text = text.strip()
        if text == "0":
            return cls(field, nvars)
        out: dict = {}
        for tok in text.split():
            if tok[0] not in "+-":
                raise ValueError(f"term {tok!r} lacks an explicit sign")
            factors = tok.split("*")
            c = field.parse(factors[0].lstrip("+"))
            e = [0] * nvars
            for fac in factors[1:]:
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?", fac)
                if not m or m.group(1) not in index:
                    raise ValueError(f"unknown factor {fac!r}")
                e[index[m.group(1)]] += int(m.group(2) or 1)
            e = tuple(e)
            out[e] = field.add(out[e], c) if e in out else c
        return cls(field, nvars, out)


@dataclass(frozen=True)
class LinForm:
    """A linear form sum c_i x_i stored as its coefficient vector."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == self.field.zero for c in self.coeffs)

    def to_poly(self) -> Poly:
        return Poly.linear(self.field, self.coeffs)

    def __call__(self, point, target: Field | None = None):
        return self.to_poly().evaluate(point, target)


def compose(p: Poly, images) -> Poly:
    """Substitute x_i -> images[i] (polynomials in a common ring)."""
    if len(images) != p.nvars:
        raise ValueError("need one image per variable")
    if not images:
        raise ValueError("no images given")
    R = images[0]
    F, n = R.field, R.nvars
    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
        return cache[key]

    acc = Poly(F, n)
    one = Poly.one(F, n)
    for e, c in p.terms.items():
        term = one
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        acc = acc + term.scale(embed(c, p.field, F))
    return acc


def restrict_linear(p: Poly, basis) -> Poly:
    """Pull p back along (t_1..t_d) -> sum t_k basis_k.

    ``basis`` is a :class:`~vsp10.linalg.Subspace` or a list of row vectors of
    length p.nvars.
    """
    rows = basis.basis if hasattr(basis, "basis") else basis
    rows = [list(r) for r in rows]
    if any(len(r) != p.nvars for r in rows):
        raise ValueError("basis vectors have the wrong length")
    F = p.field
    d = len(rows)
    images = [Poly.linear(F, [rows[k][i] for k in range(d)]) for i in range(p.nvars)]
    return compose(p, images)


def apply_diff(D: Poly, f: Poly) -> Poly:
    """Apply the constant-coefficient operator D to f.

    d^a (x^b) = a! C(b, a) x^(b-a), which is ordinary differentiation.
    """
    D._check(f)
    F = f.field
    deg = f.degree
    if 0 < F.characteristic <= deg:
        raise ValueError(f"characteristic {F.characteristic} too small for degree {deg}")
    out: dict = {}
    for a, ca in D.terms.items():
        for b, cb in f.terms.items():
            if any(x > y for x, y in zip(a, b)):
                continue
            k = 1
            for x, y in zip(a, b):
                if x:
                    k *= factorial(x) * comb(y, x)
            e = tuple(y - x for x, y in zip(a, b))
            c = F.mul(F.from_int(k), F.mul(ca, cb))
            out[e] = F.add(out[e], c) if e in out else c
    return Poly(F, f.nvars, out)


def cube(l) -> Poly:
    """l^3 for a LinForm or a linear Poly."""
    p = l.to_poly() if isinstance(l, LinForm) else l
    return p * p * p
