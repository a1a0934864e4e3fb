"""Exact arithmetic in a totally real number field Q(a) given by a monic
integral minimal polynomial, with the power basis 1, a, ..., a^(n-1).

Elements are stored as an integer numerator vector over a positive common
denominator, kept in lowest terms.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from ..errors import NotIntegral, PrecisionExhausted
from ..poly import UniPoly
from .finitefield import FiniteField, factor_mod_p, field_from_factor, _is_prime
from .rational import QQ

log = logging.getLogger(__name__)

DEFAULT_PRECISION = 256
MAX_PRECISION = 4096


class NumberField:
    def __init__(self, minpoly, name: str = "K", precision: int = DEFAULT_PRECISION):
        coeffs = [Fraction(c) for c in minpoly]
        if coeffs[-1] != 1 or any(c.denominator != 1 for c in coeffs):
            raise ValueError("minimal polynomial must be monic with integer coefficients")
        self.minpoly_int = tuple(int(c) for c in coeffs)
        self.minpoly = UniPoly(coeffs, QQ)
        self.degree = len(coeffs) - 1
        self.name = name
        self.precision = precision
        self.characteristic = 0
        n = self.degree
        self.zero = NFElement(self, (0,) * n, 1)
        self.one = NFElement(self, (1,) + (0,) * (n - 1), 1)
        self.gen = NFElement(self, (0, 1) + (0,) * (n - 2), 1)
        self._check_irreducible()

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly_int == other.minpoly_int

    def __hash__(self):
        return hash(("NF", self.minpoly_int))

    # -- construction ---------------------------------------------------

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field == self:
                return value
            raise TypeError("element of a different number field")
        if isinstance(value, int):
            return NFElement(self, (value,) + (0,) * (self.degree - 1), 1)
        if isinstance(value, Fraction):
            return NFElement(
                self, (value.numerator,) + (0,) * (self.degree - 1), value.denominator
            )
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def from_coeffs(self, coeffs, den: int = 1) -> "NFElement":
        """c0 + c1 a + ... from rationals, optionally all divided by ``den``."""
        coeffs = [Fraction(c) / den for c in coeffs]
        if len(coeffs) > self.degree:
            return sum(
                (self.gen ** i * c for i, c in enumerate(coeffs)), self.zero
            )
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        d = 1
        for c in coeffs:
            d = d * c.denominator // gcd(d, c.denominator)
        return NFElement(self, tuple(int(c * d) for c in coeffs), d)

    # -- structure --------------------------------------------------------

    def _check_irreducible(self):
        # No rational roots, and some prime with an irreducible reduction or
        # factorisation patterns with no common partial degree sum.
        for r in _rational_root_candidates(self.minpoly_int):
            if self.minpoly(r) == 0:
                raise ValueError(f"minimal polynomial has rational root {r}")
        n = self.degree
        possible = set(range(1, n))
        disc_primes = {p for p in range(2, 60) if _is_prime(p)}
        for p in sorted(disc_primes):
            facs = factor_mod_p(self.minpoly, p)
            if any(m > 1 for _, m in facs):
                continue
            sums = {0}
            for h, _ in facs:
                sums |= {s + h.degree for s in sums}
            possible &= sums
            if not possible:
                return
        raise ValueError("could not certify irreducibility of the minimal polynomial")

    @lru_cache(maxsize=None)
    def real_roots(self, prec: int):
        with mpmath.workprec(prec):
            roots = mpmath.polyroots(
                list(reversed(self.minpoly_int)), maxsteps=200, extraprec=prec
            )
            out = []
            for r in roots:
                if abs(mpmath.im(r)) > mpmath.mpf(2) ** (-prec // 2):
                    raise ValueError("field is not totally real")
                out.append(mpmath.re(r))
            return tuple(sorted(out))

    def order_key(self, x):
        """Sort key: the value under the largest real embedding."""
        return float(self(x).embeddings(64)[-1])

    def sqrt(self, x, precision: int | None = None):
        return nf_sqrt(self(x), precision)

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None


def _rational_root_candidates(coeffs):
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    if a0 == 0:
        return [Fraction(0)]
    divs = lambda n: [d for d in range(1, n + 1) if n % d == 0]
    out = []
    for p in divs(a0):
        for q in divs(an):
            out += [Fraction(p, q), Fraction(-p, q)]
    return out


class NFElement:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: NumberField, num, den: int):
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = gcd(den, *num)
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.field = field
        self.num = tuple(num)
        self.den = den

    # -- coercion -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NFElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __repr__(self):
        terms = []
        for i in range(len(self.num) - 1, -1, -1):
            c = self.num[i]
            if not c:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if mono:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coef}{mono}")
            else:
                terms.append(str(c))
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        if self.den == 1:
            return body
        return f"({body})/{self.den}"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return NFElement(self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        return NFElement(
            self.field,
            tuple(a * o.den + b * self.den for a, b in zip(self.num, o.num)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        if not any(b[1:]):
            k = b[0]
            return NFElement(self.field, tuple(c * k for c in a), self.den * o.den)
        if not any(a[1:]):
            k = a[0]
            return NFElement(self.field, tuple(c * k for c in b), self.den * o.den)
        n = len(a)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        m = self.field.minpoly_int
        for i in range(2 * n - 2, n - 1, -1):
            t = prod[i]
            if t:
                base = i - n
                for j in range(n):
                    prod[base + j] -= t * m[j]
        return NFElement(self.field, tuple(prod[:n]), self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        return nf_inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not any(o.num[1:]):
            if o.num[0] == 0:
                raise ZeroDivisionError("division by zero in number field")
            return NFElement(self.field, tuple(c * o.den for c in self.num), self.den * o.num[0])
        return self * nf_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * nf_inv(self)

    # -- numerics -------------------------------------------------------

    def embeddings(self, prec: int = DEFAULT_PRECISION):
        """Values under the real embeddings, in increasing order of the root."""
        roots = self.field.real_roots(prec)
        with mpmath.workprec(prec):
            out = []
            for r in roots:
                acc = mpmath.mpf(0)
                for c in reversed(self.num):
                    acc = acc * r + c
                out.append(acc / self.den)
            return out

    def minpoly_eval(self, poly_int) -> "NFElement":
        acc = self.field.zero
        for c in reversed(poly_int):
            acc = acc * self + c
        return acc


def nf_inv(x: NFElement) -> NFElement:
    """Inverse via the extended Euclidean algorithm against the minimal polynomial."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in number field")
    K = x.field
    if x.is_rational():
        return K(Fraction(x.den, x.num[0]))
    # Solve x * y = 1 as a linear system in the power basis (integer Bareiss).
    n = K.degree
    cols = []
    e = NFElement(K, x.num, 1)
    cur = e
    for j in range(n):
        cols.append(cur.num)
        if j + 1 < n:
            cur = cur * K.gen
    # matrix M[i][j] = coefficient i of num * a^j; augmented with den * e_0
    rows = [[cols[j][i] for j in range(n)] + [x.den if i == 0 else 0] for i in range(n)]
    prev = 1
    for k in range(n):
        piv = next(i for i in range(k, n) if rows[i][k] != 0)
        rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rows[i] = [(pk[k] * ri[j] - ri[k] * pk[j]) // prev for j in range(n + 1)]
        prev = pk[k]
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * sol[j]
        sol[i] = acc / rows[i][i]
    return K.from_coeffs(sol)


# -- square roots --------------------------------------------------------------


def _residue_nonsquare_witness(s: NFElement, max_prime: int = 200):
    """A prime ideal modulo which s is a nonzero nonsquare, or None."""
    K = s.field
    for p in range(3, max_prime):
        if not _is_prime(p) or s.den % p == 0:
            continue
        facs = factor_mod_p(K.minpoly, p)
        if any(m > 1 for _, m in facs):
            continue
        for fac, _ in facs:
            F = field_from_factor(fac)
            r = residue_reduce(s, p, fac, F)
            if not r.is_zero() and not F.is_square(r):
                return p, fac
    return None


def nf_sqrt(s: NFElement, precision: int | None = None):
    """Exact square root in K, or None when s is provably not a square.

    A candidate is reconstructed from the real embeddings (all sign choices),
    rounded to integer power-basis coordinates after scaling by the
    denominator, and accepted only if it squares to s exactly.
    """
    K = s.field
    if s.is_zero():
        return s
    if s.is_rational():
        r = QQ.sqrt(Fraction(s.num[0], s.den))
        if r is not None:
            return K(r)
    prec = precision or K.precision
    emb = s.embeddings(prec)
    if any(v < 0 for v in emb):
        return None
    witness = _residue_nonsquare_witness(s)
    if witness is not None:
        log.debug("sqrt: %s is a nonsquare modulo a prime above %d", s, witness[0])
        return None
    # t = sqrt(den^2 * s) = sqrt(den * num) is integral, so its coordinates are integers.
    m = s.den
    target = NFElement(K, tuple(c * m for c in s.num), 1)
    n = K.degree
    while prec <= MAX_PRECISION:
        with mpmath.workprec(prec):
            roots = K.real_roots(prec)
            vals = [mpmath.sqrt(v) for v in target.embeddings(prec)]
            V = mpmath.matrix([[r ** j for j in range(n)] for r in roots])
            Vinv = V ** -1
            for mask in range(2 ** (n - 1)):
                signed = [(-v if (mask >> i) & 1 else v) for i, v in enumerate(vals)]
                coords = Vinv * mpmath.matrix(signed)
                ints = [int(mpmath.nint(coords[i])) for i in range(n)]
                if any(abs(coords[i] - ints[i]) > mpmath.mpf("0.01") for i in range(n)):
                    continue
                cand = NFElement(K, tuple(ints), 1)
                if cand * cand == target:
                    root = NFElement(K, cand.num, m)
                    return root if _positive_first(root) else -root
        prec *= 2
    raise PrecisionExhausted(f"could not decide whether {s} is a square in {K}")


def _positive_first(x: NFElement) -> bool:
    for c in x.num:
        if c:
            return c > 0
    return True


def residue_reduce(x: NFElement, p: int, factor: UniPoly, field: FiniteField | None = None):
    """Image of x in the residue field F_p[t]/(factor)."""
    if x.den % p == 0:
        raise NotIntegral(f"{x} is not {p}-integral")
    F = field or field_from_factor(factor)
    inv_den = pow(x.den, -1, p)
    return F.from_coeffs([c * inv_den for c in x.num])


# The field K = Q(zeta_13)^+ generated by 2cos(2 pi/13).
K = NumberField([-1, -3, 6, 4, -5, -1, 1], name="K")
a = K.gen


class working_precision:
    """Temporarily set the default embedding precision of a number field."""

    def __init__(self, bits: int, field: NumberField = K):
        self.bits = bits
        self.field = field

    def __enter__(self):
        self._saved = self.field.precision
        self.field.precision = self.bits
        return self.field

    def __exit__(self, *exc):
        self.field.precision = self._saved
        return False
