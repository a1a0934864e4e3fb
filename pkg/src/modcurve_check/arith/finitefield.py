"""Finite fields F_p[t]/(m(t)) and polynomial factorisation over F_p."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from ..errors import NotIntegral
from ..poly import UniPoly, gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


class FiniteField:
    """The field F_p[t]/(modulus) of order p^deg(modulus).

    ``modulus`` is a list of integers (constant term first) of a monic
    polynomial, assumed irreducible mod p; :func:`verify_irreducible` checks it.
    """

    def __init__(self, p: int, modulus=None, name: str | None = None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if modulus is None:
            modulus = [0, 1]
        modulus = [int(c) % p for c in modulus]
        while modulus and modulus[-1] == 0:
            modulus.pop()
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.p = p
        self.characteristic = p
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.order = p ** self.degree
        self.name = name or (f"GF({p})" if self.degree == 1 else f"GF({p}^{self.degree})")
        self._key = (p, self.modulus)
        self.zero = FFElement(self, (0,) * self.degree)
        self.one = FFElement(self, (1,) + (0,) * (self.degree - 1))

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field == self:
                return value
            if value.field.degree == 1 and value.field.p == self.p:
                return self.from_int(value.c[0])
            raise TypeError(f"cannot coerce {value.field} element into {self}")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise NotIntegral(f"{value} is not {self.p}-integral")
            return self.from_int(value.numerator * pow(value.denominator, -1, self.p))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_int(self, n: int) -> "FFElement":
        return FFElement(self, (n % self.p,) + (0,) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> "FFElement":
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.degree:
            return FFElement(self, _reduce(c, self.modulus, self.p))
        return FFElement(self, tuple(c) + (0,) * (self.degree - len(c)))

    @property
    def gen(self) -> "FFElement":
        if self.degree == 1:
            return self.from_int(-self.modulus[0])
        return self.from_coeffs([0, 1])

    def elements(self):
        for c in itertools.product(range(self.p), repeat=self.degree):
            yield FFElement(self, c[::-1])

    def is_square(self, x) -> bool:
        x = self(x)
        if x.is_zero() or self.p == 2:
            return True
        return x ** ((self.order - 1) // 2) == self.one

    def sqrt(self, x):
        """Tonelli-Shanks; returns None for nonsquares."""
        x = self(x)
        if x.is_zero():
            return x
        q = self.order
        if self.p == 2:
            return x ** (q // 2)
        if not self.is_square(x):
            return None
        s, t = 0, q - 1
        while t % 2 == 0:
            t //= 2
            s += 1
        z = next(e for e in self.elements() if not e.is_zero() and not self.is_square(e))
        m, c = s, z ** t
        tt, r = x ** t, x ** ((t + 1) // 2)
        while tt != self.one:
            i, probe = 0, tt
            while probe != self.one:
                probe = probe * probe
                i += 1
            b = c ** (1 << (m - i - 1))
            m, c = i, b * b
            tt, r = tt * c, r * b
        return r

    def order_key(self, x):
        return tuple(reversed(self(x).c))

    def poly(self, coeffs) -> UniPoly:
        return UniPoly(coeffs, self)


def _reduce(c, modulus, p):
    c = list(c)
    n = len(modulus) - 1
    for i in range(len(c) - 1, n - 1, -1):
        t = c[i]
        if t:
            for j in range(n):
                c[i - n + j] = (c[i - n + j] - t * modulus[j]) % p
        c[i] = 0
    return tuple(x % p for x in c[:n])


class FFElement:
    __slots__ = ("field", "c")

    def __init__(self, field: FiniteField, c):
        self.field = field
        self.c = c

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field is self.field or other.field == self.field:
                return other
            return self.field(other)
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self.field.degree == 1:
            return hash(self.c[0])
        return hash(self.c)

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.c[0])
        terms = [f"{v}*t^{i}" if i else str(v) for i, v in enumerate(self.c) if v]
        return " + ".join(terms) or "0"

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        p = f.p
        if f.degree == 1:
            return FFElement(f, ((self.c[0] * o.c[0]) % p,))
        prod = [0] * (2 * f.degree - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    prod[i + j] += a * b
        return FFElement(f, _reduce(prod, f.modulus, p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        f = self.field
        if f.degree == 1:
            return FFElement(f, (pow(self.c[0], -1, f.p),))
        return self ** (f.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()


@lru_cache(maxsize=None)
def GF(p: int) -> FiniteField:
    return FiniteField(p)


# -- polynomial factorisation over F_p ---------------------------------------


def reduce_poly_mod_p(g: UniPoly, p: int) -> UniPoly:
    """Coefficientwise reduction of a polynomial over Q into F_p[x]."""
    F = GF(p)
    coeffs = []
    for c in g.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise NotIntegral(f"coefficient {c} has denominator divisible by {p}")
        coeffs.append(F(c))
    return UniPoly(coeffs, F, _trusted=True)


def _pth_root(g: UniPoly, p: int) -> UniPoly:
    F = g.field
    # over a prime field, a^(1/p) = a
    return UniPoly([g.coeffs[i] for i in range(0, len(g.coeffs), p)], F, _trusted=True)


def squarefree_factorization(g: UniPoly):
    """Yun-style squarefree factorisation over a prime field: [(h, mult)]."""
    F = g.field
    p = F.p
    out = []
    g = g.monic()
    i = 1
    w = None
    c = gcd(g, g.derivative())
    w = g.exact_div(c)
    while w.degree > 0:
        y = gcd(w, c)
        fac = w.exact_div(y)
        if fac.degree > 0:
            out.append((fac, i))
        w, c = y, c.exact_div(y)
        i += 1
    if c.degree > 0:
        for h, m in squarefree_factorization(_pth_root(c, p)):
            out.append((h, m * p))
    merged = {}
    for h, m in out:
        merged[m] = merged.get(m, UniPoly.one(F)) * h
    return sorted(((h, m) for m, h in merged.items()), key=lambda hm: hm[1])


def distinct_degree_factorization(g: UniPoly):
    """For squarefree monic g: [(product of all degree-d factors, d)]."""
    F = g.field
    x = UniPoly.x(F)
    out = []
    h = x
    d = 0
    rest = g
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(F.order, rest)
        fac = gcd(rest, h - x)
        if fac.degree > 0:
            out.append((fac, d))
            rest = rest.exact_div(fac)
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree_factorization(g: UniPoly, d: int, rng: random.Random):
    """Cantor-Zassenhaus splitting of a product of distinct degree-d factors."""
    if g.degree == d:
        return [g.monic()]
    F = g.field
    n = g.degree
    q = F.order
    while True:
        a = UniPoly([F.from_int(rng.randrange(q)) for _ in range(n)], F, _trusted=True)
        if a.degree < 1:
            continue
        if F.p == 2:
            t, b = a % g, a % g
            for _ in range(d - 1):
                t = (t * t) % g
                b = b + t
        else:
            b = a.pow_mod((q ** d - 1) // 2, g) - UniPoly.one(F)
        h = gcd(g, b)
        if 0 < h.degree < n:
            return equal_degree_factorization(h, d, rng) + equal_degree_factorization(
                g.exact_div(h), d, rng
            )


def _poly_key(h: UniPoly):
    return (h.degree, tuple(c.c for c in reversed(h.coeffs)))


def factor_over_prime_field(g: UniPoly, rng: random.Random | None = None):
    """Factor a nonzero polynomial over GF(p) into monic irreducibles."""
    rng = rng or random.Random(0)
    out = []
    for sq, m in squarefree_factorization(g):
        for part, d in distinct_degree_factorization(sq):
            for h in equal_degree_factorization(part, d, rng):
                out.append((h, m))
    return sorted(out, key=lambda hm: _poly_key(hm[0]))


def factor_mod_p(g: UniPoly, p: int, seed: int = 0):
    """Factor a p-integral rational polynomial modulo p.

    Returns [(monic irreducible UniPoly over GF(p), multiplicity)], sorted by
    degree then coefficients.  Splitting is randomised but seeded.
    """
    if g.degree < 1:
        raise ValueError("factor_mod_p needs a polynomial of degree >= 1")
    gp = reduce_poly_mod_p(g, p)
    if gp.degree < 1:
        raise ValueError(f"polynomial is constant modulo {p}")
    return factor_over_prime_field(gp, random.Random(seed))


def is_irreducible(g: UniPoly) -> bool:
    if g.degree < 1:
        return False
    sq = squarefree_factorization(g)
    if len(sq) != 1 or sq[0][1] != 1:
        return False
    ddf = distinct_degree_factorization(g.monic())
    return len(ddf) == 1 and ddf[0][1] == g.degree


def verify_irreducible(field: FiniteField) -> bool:
    F = GF(field.p)
    return is_irreducible(UniPoly([F.from_int(c) for c in field.modulus], F, _trusted=True))


def field_from_factor(factor: UniPoly) -> FiniteField:
    """The residue field F_p[t]/(factor) for a monic irreducible factor over GF(p)."""
    p = factor.field.p
    modulus = [c.c[0] for c in factor.monic().coeffs]
    return FiniteField(p, modulus)


@lru_cache(maxsize=None)
def extension_field(p: int, k: int) -> FiniteField:
    """A fixed model of F_{p^k}: the lexicographically first monic irreducible."""
    if k == 1:
        return GF(p)
    F = GF(p)
    for tail in itertools.product(range(p), repeat=k):
        coeffs = list(tail) + [1]
        if coeffs[0] == 0:
            continue
        g = UniPoly([F.from_int(c) for c in coeffs], F, _trusted=True)
        if is_irreducible(g):
            return FiniteField(p, coeffs)
    raise AssertionError("no irreducible polynomial found")
