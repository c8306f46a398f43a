"""Exact coefficient fields and univariate polynomials over them.

Three kinds of field are supported: the rationals, prime fields GF(p) with
p >= 5, and extensions GF(p^k) presented as GF(p)[z]/(modulus).  Elements are
stored as plain canonical values and the field object carries the arithmetic:

* rationals      -> ``fractions.Fraction``
* GF(p)          -> ``int`` in ``range(p)``
* GF(p)[z]/(m)   -> ``tuple`` of ``k`` ints (coefficients of 1, z, ..., z^(k-1))

Keeping elements bare keeps the polynomial and Groebner code fast; every
container (polynomial, matrix, point) records the field it lives over.
"""

from __future__ import annotations

import random
import threading
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "FieldError",
    "Field",
    "Rationals",
    "PrimeField",
    "ExtensionField",
    "QQ",
    "GF",
    "is_prime",
    "prime_field",
    "ext_create",
    "field_inverse",
    "UniPoly",
    "poly_gcd",
    "factor_univariate",
    "squarefree_decomposition",
    "is_irreducible",
    "roots",
    "embed",
    "embedding_image",
    "common_field",
]


class FieldError(ValueError):
    """Invalid field construction or an operation mixing incompatible fields."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, which covers every use here."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Shared helpers; subclasses supply the elementary operations."""

    characteristic: int
    order: int | None
    degree: int
    zero: object
    one: object

    def is_zero(self, a) -> bool:
        return a == self.zero

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def from_int(self, n: int):
        return self(n)

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def prime_subfield(self) -> "Field":
        return self


class Rationals(Field):
    characteristic = 0
    order = None
    degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("QQ")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0 in QQ")
        return a / b

    def from_base(self, c):
        return Fraction(c)

    def random(self, rng: random.Random, bound: int = 9) -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str) -> Fraction:
        return Fraction(s)


QQ = Rationals()


class PrimeField(Field):
    """GF(p) for a prime p >= 5."""

    degree = 1

    def __init__(self, p: int):
        if p in (2, 3):
            raise FieldError("characteristic 2 and 3 are not supported")
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self(Fraction(x))
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def from_base(self, c):
        return c

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str) -> int:
        return self(s)

    def frobenius(self, a, times: int = 1):
        return a


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def GF(p: int, k: int = 1) -> Field:
    """GF(p^k) with the canonical modulus chosen by :func:`ext_create`."""
    return ext_create(p, k)


# ---------------------------------------------------------------------------
# raw coefficient-list arithmetic over GF(p) (low degree first)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list, b: list, p: int) -> tuple[list, list]:
    a = [x % p for x in a]
    _trim(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lc = pow(b[-1], -1, p)
    if len(a) <= db:
        return [], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lc % p
            q[i - db] = c
            off = i - db
            for j in range(db + 1):
                a[off + j] -= c * b[j]
    r = [x % p for x in a[:db]]
    return _trim(q), _trim(r)


def _pxgcd(a: list, b: list, p: int) -> tuple[list, list]:
    """Return (g, s) with g = gcd(a, b) monic and s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        qs = _pmul(q, s1, p)
        s2 = [0] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            s2[i] = x
        for i, x in enumerate(qs):
            s2[i] = (s2[i] - x) % p
        s0, s1 = s1, _trim(s2)
    inv = pow(r0[-1], -1, p)
    return [x * inv % p for x in r0], [x * inv % p for x in s0]


def _pmul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


class ExtensionField(Field):
    """GF(p)[z]/(modulus) for a monic irreducible modulus of degree k >= 2."""

    def __init__(self, p: int, modulus, check: bool = True):
        base = prime_field(p)
        mod = [int(c) % p for c in modulus]
        _trim(mod)
        if len(mod) < 3:
            raise FieldError("extension modulus must have degree >= 2")
        if mod[-1] != 1:
            raise FieldError("extension modulus must be monic")
        self.p = p
        self.base = base
        self.modulus = tuple(mod)
        self.k = len(mod) - 1
        self.degree = self.k
        self.characteristic = p
        self.order = p**self.k
        self.zero = (0,) * self.k
        self.one = (1,) + (0,) * (self.k - 1)
        self.gen = (0, 1) + (0,) * (self.k - 2)
        self._frob_rows = None
        if check and not is_irreducible(UniPoly(base, mod)):
            raise FieldError(f"modulus {mod} is reducible over GF({p})")

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})[{','.join(map(str, self.modulus))}]"

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtensionField) and other.modulus == self.modulus and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GFext", self.p, self.modulus))

    @property
    def prime_subfield(self) -> PrimeField:
        return self.base

    def __call__(self, x):
        if isinstance(x, (tuple, list)):
            if len(x) > self.k:
                return self._reduce([int(c) for c in x])
            return tuple(int(c) % self.p for c in x) + (0,) * (self.k - len(x))
        return (self.base(x),) + (0,) * (self.k - 1)

    def from_base(self, c):
        return (c % self.p,) + (0,) * (self.k - 1)

    def _reduce(self, prod: list) -> tuple:
        p, k, mod = self.p, self.k, self.modulus
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d] % p
            if c:
                off = d - k
                for t in range(k):
                    prod[off + t] -= c * mod[t]
        prod = prod[:k] + [0] * (k - len(prod))
        return tuple(x % p for x in prod)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        k = self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def scale(self, c: int, a):
        p = self.p
        return tuple(c * x % p for x in a)

    def inv(self, a):
        la = _trim(list(a))
        if not la:
            raise ZeroDivisionError(f"inverse of 0 in {self!r}")
        g, s = _pxgcd(la, list(self.modulus), self.p)
        if g != [1]:
            raise FieldError("modulus is not irreducible")
        return self(s)

    def random(self, rng: random.Random):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def frobenius(self, a, times: int = 1):
        """a -> a^(p^times), computed with a cached GF(p)-linear table."""
        if self._frob_rows is None:
            zp = self.pow(self.gen, self.p)
            rows = [self.one]
            for _ in range(self.k - 1):
                rows.append(self.mul(rows[-1], zp))
            self._frob_rows = rows
        p, k, rows = self.p, self.k, self._frob_rows
        for _ in range(times % self.k):
            out = [0] * k
            for c, row in zip(a, rows):
                if c:
                    for t in range(k):
                        out[t] += c * row[t]
            a = tuple(x % p for x in out)
        return a

    def format(self, a) -> str:
        return "(" + ",".join(map(str, a)) + ")"

    def parse(self, s: str):
        s = s.strip()
        if s.startswith("("):
            return self(tuple(int(c) for c in s.strip("()").split(",")))
        return self(int(s))


def field_inverse(field: Field, a):
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return field.inv(a)


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        field_zero = field.zero
        cs = list(coeffs)
        while cs and cs[-1] == field_zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field: Field, c) -> "UniPoly":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c != F.zero:
                parts.append(f"{F.format(c)}*x^{i}" if i else F.format(c))
        return " + ".join(parts)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return UniPoly(F, out)

    def __neg__(self) -> "UniPoly":
        F = self.field
        return UniPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        F = self.field
        if isinstance(F, PrimeField):
            return UniPoly(F, _pmul(list(self.coeffs), list(other.coeffs), F.p))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(F, [])
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x != F.zero:
                for j, y in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return UniPoly(F, out)

    def scale(self, c) -> "UniPoly":
        F = self.field
        return UniPoly(F, [F.mul(c, x) for x in self.coeffs])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if isinstance(F, PrimeField):
            q, r = _pdivmod(list(self.coeffs), list(other.coeffs), F.p)
            return UniPoly(F, q), UniPoly(F, r)
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) <= db:
            return UniPoly(F, []), self
        inv_lc = F.inv(b[-1])
        q = [F.zero] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c != F.zero:
                c = F.mul(c, inv_lc)
                q[i - db] = c
                off = i - db
                for j in range(db + 1):
                    a[off + j] = F.sub(a[off + j], F.mul(c, b[j]))
        return UniPoly(F, q), UniPoly(F, a[:db])

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __call__(self, a):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def evaluate_in(self, target: Field, a):
        """Evaluate at an element of an extension of the coefficient field."""
        acc = target.zero
        for c in reversed(self.coeffs):
            acc = target.add(target.mul(acc, a), embed(c, self.field, target))
        return acc

    def derivative(self) -> "UniPoly":
        F = self.field
        return UniPoly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, mod: "UniPoly") -> "UniPoly":
        result = UniPoly.const(self.field, self.field.one) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# factorization over finite fields


def _pth_root(f: UniPoly) -> UniPoly:
    F = f.field
    p = F.characteristic
    q = F.order
    cs = f.coeffs
    out = []
    for i in range(0, len(cs), p):
        c = cs[i]
        # the p-th root of c in GF(q) is c^(q/p)
        out.append(F.pow(c, q // p) if q != p else c)
    return UniPoly(F, out)


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic squarefree factors with multiplicities, for f monic over GF(q)."""
    F = f.field
    p = F.characteristic
    out: list[tuple[UniPoly, int]] = []
    df = f.derivative()
    if df.is_zero():
        if f.degree <= 0:
            return out
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, e * p) for g, e in squarefree_decomposition(_pth_root(c.monic())))
    return out


def _distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    F = f.field
    q = F.order
    x = UniPoly.x(F)
    h = x % f
    out = []
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _equal_degree(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    if f.degree == d:
        return [f.monic()]
    F = f.field
    q = F.order
    e = (q**d - 1) // 2
    one = UniPoly.const(F, F.one)
    while True:
        a = UniPoly(F, [F.random(rng) for _ in range(f.degree)])
        if a.degree <= 0:
            continue
        g = poly_gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        g = poly_gcd(a.powmod(e, f) - one, f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _poly_key(g: UniPoly):
    F = g.field
    return (g.degree, tuple(F.format(c) for c in g.coeffs))


def factor_univariate(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Factor f over a finite field into monic irreducibles with multiplicities.

    The product of the factors to their multiplicities equals ``f.monic()``.
    Randomized splitting is seeded from the input, so results are
    reproducible.
    """
    F = f.field
    if not F.is_finite:
        raise FieldError("factorization is only available over finite fields")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if F.order % 2 == 0:
        raise FieldError("even characteristic is not supported")
    rng = random.Random(repr((F, f.coeffs)))
    out = []
    for g, mult in squarefree_decomposition(f.monic()):
        for h, d in _distinct_degree(g):
            for irr in _equal_degree(h, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (_poly_key(t[0]), t[1]))
    return out


def roots(f: UniPoly) -> list:
    """Distinct roots of f in its coefficient field (finite fields only)."""
    F = f.field
    return [F.neg(g.coeffs[0]) for g, _ in factor_univariate(f) if g.degree == 1]


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1."""
    F = f.field
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    q = F.order
    x = UniPoly.x(F)
    primes = [r for r in range(2, n + 1) if n % r == 0 and is_prime(r)]
    needed = sorted({n // r for r in primes})
    h = x % f
    k = 0
    for target in needed:
        while k < target:
            h = h.powmod(q, f)
            k += 1
        if poly_gcd(h - x, f).degree != 0:
            return False
    while k < n:
        h = h.powmod(q, f)
        k += 1
    return (h - x).is_zero()


def _ben_or_irreducible(f: UniPoly) -> bool:
    # early abort on small-degree factors, which most random candidates have
    F = f.field
    x = UniPoly.x(F)
    h = x % f
    for _ in range(f.degree // 2):
        h = h.powmod(F.order, f)
        if poly_gcd(h - x, f).degree != 0:
            return False
    return True


_EXT_LOCK = threading.Lock()
_EXT_CACHE: dict[tuple[int, int], Field] = {}


def ext_create(p: int, k: int) -> Field:
    """The canonical GF(p^k): deterministic random monic irreducible modulus."""
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if k == 1:
        return prime_field(p)
    key = (p, k)
    with _EXT_LOCK:
        if key in _EXT_CACHE:
            return _EXT_CACHE[key]
    base = prime_field(p)
    rng = random.Random(f"ext:{p}:{k}")
    while True:
        cs = [rng.randrange(p) for _ in range(k)] + [1]
        if cs[0] == 0:
            continue
        cand = UniPoly(base, cs)
        if _ben_or_irreducible(cand):
            break
    field = ExtensionField(p, cs, check=False)
    with _EXT_LOCK:
        return _EXT_CACHE.setdefault(key, field)


# ---------------------------------------------------------------------------
# embeddings between finite fields of the same characteristic


_EMBED_LOCK = threading.Lock()
_EMBED_CACHE: dict[tuple, object] = {}


def _nullspace_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    # kernel of the linear map v -> rows * v
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc] % p
        basis.append(v)
    return basis


def _subfield_basis(target: ExtensionField, j: int) -> list[tuple]:
    """GF(p)-basis of the degree-j subfield: the fixed points of Frob^j."""
    k, p = target.k, target.p
    if j == k:
        return [tuple(1 if i == t else 0 for i in range(k)) for t in range(k)]
    cols = []
    for t in range(k):
        e = tuple(1 if i == t else 0 for i in range(k))
        img = target.frobenius(e, j)
        cols.append([(a - b) % p for a, b in zip(img, e)])
    rows = [[cols[t][i] for t in range(k)] for i in range(k)]
    return [tuple(v) for v in _nullspace_mod_p(rows, k, p)]


def _min_poly_over_prime(target: ExtensionField, beta, j: int):
    """Minimal polynomial coefficients of beta if it has degree exactly j."""
    p = target.p
    powers = [target.one]
    for _ in range(j):
        powers.append(target.mul(powers[-1], beta))
    # a dependency among 1..beta^(j-1) means beta lies in a smaller subfield
    cols = [list(v) for v in powers[:j]]
    rows = [[cols[t][i] for t in range(j)] for i in range(target.k)]
    if _nullspace_mod_p(rows, j, p):
        return None
    aug = [rows[i] + [powers[j][i]] for i in range(target.k)]
    sol = _nullspace_mod_p(aug, j + 1, p)
    v = sol[0]
    inv = pow(v[j], -1, p)
    return [x * inv % p for x in v[:j]] + [1]


def _find_root(source: ExtensionField, target: ExtensionField, rng: random.Random):
    j = source.k
    p = source.p
    basis = _subfield_basis(target, j)
    while True:
        coeffs = [rng.randrange(p) for _ in basis]
        beta = target.zero
        for c, b in zip(coeffs, basis):
            beta = target.add(beta, target.scale(c, b))
        psi = _min_poly_over_prime(target, beta, j)
        if psi is not None:
            break
    helper = ExtensionField(p, psi, check=False)
    phi = UniPoly(helper, [helper.from_base(c) for c in source.modulus])
    lin = _equal_degree(phi, 1, rng)[0]
    r_helper = helper.neg(lin.coeffs[0])
    # map the helper root back through y -> beta
    r = target.zero
    bpow = target.one
    for c in r_helper:
        r = target.add(r, target.scale(c, bpow))
        bpow = target.mul(bpow, beta)
    return r


def embedding_image(source: ExtensionField, target: ExtensionField):
    """Image of the generator z of ``source`` in ``target`` (cached).

    A fresh embedding is chosen among the conjugate roots so that it commutes
    with every cached embedding into ``source`` and ``target``.
    """
    if target.k % source.k:
        raise FieldError(f"GF(p^{source.k}) does not embed in GF(p^{target.k})")
    key = (source.p, source.modulus, target.modulus)
    with _EMBED_LOCK:
        if key in _EMBED_CACHE:
            return _EMBED_CACHE[key]
        snapshot = dict(_EMBED_CACHE)
    if source == target:
        img = target.gen
    else:
        rng = random.Random(repr(key))
        root = _find_root(source, target, rng)
        conjugates = [root]
        for _ in range(source.k - 1):
            conjugates.append(target.frobenius(conjugates[-1]))
        constraints = []
        for (p, smod, tmod), sub_img in snapshot.items():
            if p != source.p or smod == source.modulus:
                continue
            if tmod == source.modulus:
                direct = snapshot.get((p, smod, target.modulus))
                if direct is not None:
                    constraints.append((sub_img, direct))
        img = None
        for cand in conjugates:
            ok = all(_eval_poly_tuple(target, sub_img, cand) == direct for sub_img, direct in constraints)
            if ok:
                img = cand
                break
        if img is None:
            raise FieldError("cached embeddings are mutually inconsistent")
    with _EMBED_LOCK:
        return _EMBED_CACHE.setdefault(key, img)


def _eval_poly_tuple(target: Field, coeffs, a):
    acc = target.zero
    for c in reversed(coeffs):
        acc = target.add(target.mul(acc, a), target.from_base(c))
    return acc


def embed(a, source: Field, target: Field):
    """Ring-homomorphic image of ``a`` under the fixed embedding source -> target."""
    if source == target:
        return a
    if isinstance(source, Rationals):
        return target(a)
    if source.characteristic != target.characteristic:
        raise FieldError(f"cannot embed {source!r} into {target!r}")
    if isinstance(source, PrimeField):
        return target.from_base(a)
    if target.degree % source.degree:
        raise FieldError(f"degree {source.degree} does not divide {target.degree}")
    img = embedding_image(source, target)
    return _eval_poly_tuple(target, a, img)


def common_field(fields) -> Field:
    """Smallest canonical field containing all given finite fields (GF(p^lcm))."""
    from math import lcm

    fields = list(fields)
    if not fields:
        raise ValueError("no fields given")
    if all(isinstance(F, Rationals) for F in fields):
        return QQ
    p = fields[0].characteristic
    if any(F.characteristic != p for F in fields):
        raise FieldError("fields of different characteristic")
    k = lcm(*(F.degree for F in fields))
    if k == 1:
        return prime_field(p)
    for F in fields:
        if F.degree == k:
            return F
    return ext_create(p, k)
