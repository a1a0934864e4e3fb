"""Dense univariate polynomials over an exact field, Moebius maps and the
linear solves behind the even (bielliptic) sextic models.

A field is any object with ``zero``, ``one`` and a ``__call__`` that coerces
integers/rationals into the field; elements support ``+ - * /`` and ``==``.
Polynomials store coefficients constant term first; the zero polynomial has an
empty coefficient list and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInvolution, Inconsistent, NotSplit


class UniPoly:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field, _trusted=False):
        self.field = field
        if not _trusted:
            coeffs = [field(c) for c in coeffs]
        else:
            coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.coeffs = coeffs

    # -- construction -------------------------------------------------------

    @classmethod
    def x(cls, field):
        return cls([field.zero, field.one], field, _trusted=True)

    @classmethod
    def constant(cls, c, field):
        return cls([field(c)], field, _trusted=True)

    @classmethod
    def zero(cls, field):
        return cls([], field, _trusted=True)

    @classmethod
    def one(cls, field):
        return cls([field.one], field, _trusted=True)

    @classmethod
    def from_roots(cls, roots, field):
        p = cls.one(field)
        for r in roots:
            p = p * cls([-r, field.one], field)
        return p

    def _wrap(self, coeffs):
        return UniPoly(coeffs, self.field, _trusted=True)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([self.field(other)], self.field, _trusted=True)

    # -- basic accessors ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            other = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == self.field.zero:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.field(other)
            return self._wrap([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._wrap([])
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == self.field.zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._wrap(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return self._wrap([]), self
        inv_lc = self.field.one / other.lc
        q = [self.field.zero] * (dq + 1)
        b = other.coeffs
        nb = len(b) - 1
        for k in range(dq, -1, -1):
            c = r[k + nb] * inv_lc
            q[k] = c
            if c == self.field.zero:
                continue
            for j in range(nb):
                r[k + j] = r[k + j] - c * b[j]
        return self._wrap(q), self._wrap(r[:nb])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __truediv__(self, scalar):
        inv = self.field.one / self.field(scalar)
        return self._wrap([c * inv for c in self.coeffs])

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return self._wrap([c * i for i, c in enumerate(self.coeffs)][1:])

    def compose(self, other):
        other = self._lift(other)
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def monic(self):
        if self.is_zero():
            return self
        if self.lc == self.field.one:
            return self
        return self / self.lc

    def map_coeffs(self, fn, field):
        return UniPoly([fn(c) for c in self.coeffs], field)

    def pow_mod(self, n: int, modulus):
        result = UniPoly.one(self.field)
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    def reverse(self, n: int | None = None):
        """Return x^n * p(1/x), n defaulting to the degree."""
        if n is None:
            n = self.degree
        c = list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs))
        return self._wrap(c[: n + 1][::-1])


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly):
    """Return (g, s, t) with g = s*a + t*b and g monic (or zero)."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.one(field), UniPoly.zero(field)
    t0, t1 = UniPoly.zero(field), UniPoly.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = field.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(f: UniPoly, g: UniPoly):
    """Resultant via the Euclidean remainder sequence."""
    field = f.field
    if f.is_zero() or g.is_zero():
        return field.zero
    acc = field.one
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return acc * g.lc ** m
        r = f % g
        if r.is_zero():
            return field.zero
        k = r.degree
        if (m * n) % 2:
            acc = -acc
        acc = acc * g.lc ** (m - k)
        f, g = g, r


def discriminant(f: UniPoly):
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return f.field(sign) * res / f.lc


# -- Moebius maps -------------------------------------------------------------


@dataclass(frozen=True)
class MoebiusMap:
    """x -> (p*x + q) / (r*x + s)."""

    p: object
    q: object
    r: object
    s: object

    def __post_init__(self):
        if self.p * self.s - self.q * self.r == 0:
            raise ValueError("degenerate Moebius map (ps - qr = 0)")

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self o other."""
        return MoebiusMap(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def is_scalar(self) -> bool:
        return self.q == 0 and self.r == 0 and self.p == self.s

    def __call__(self, x):
        return (self.p * x + self.q) / (self.r * x + self.s)


def moebius_is_involution(m: MoebiusMap) -> bool:
    return m.compose(m).is_scalar() and not m.is_scalar()


def moebius_transform_sextic(f: UniPoly, m: MoebiusMap) -> UniPoly:
    """(r x + s)^6 * f((p x + q)/(r x + s))."""
    if f.degree != 6:
        raise ValueError(f"expected a sextic, got degree {f.degree}")
    field = f.field
    num = UniPoly([m.q, m.p], field)
    den = UniPoly([m.s, m.r], field)
    out = UniPoly.zero(field)
    for i, c in enumerate(f.coeffs):
        out = out + (num ** i) * (den ** (6 - i)) * c
    return out


def proportionality(g: UniPoly, f: UniPoly):
    """Return lam with g == lam*f, or None."""
    if f.is_zero():
        return None
    lam = g.lc / f.lc
    return lam if g == f * lam else None


def solve_d_pair(b, c, field, order_key=None):
    """Roots d1, d2 of t^2 + (2/c) t - b/c.

    These are the d with (x + d1)/(x + d2) anti-invariant under
    x -> (x + b)/(c x - 1).  ``order_key`` maps a root to a sortable value;
    the root with the smaller key is returned first.
    """
    b, c = field(b), field(c)
    if c == field.zero:
        raise DegenerateInvolution("c = 0: the map x -> -x - b is not handled")
    two = field(2)
    disc = two * two / (c * c) + two * two * b / c
    t = field.sqrt(disc)
    if t is None:
        raise NotSplit(f"discriminant {disc} is not a square")
    r1 = (-two / c + t) / two
    r2 = (-two / c - t) / two
    key = order_key or field.order_key
    if key(r2) < key(r1):
        r1, r2 = r2, r1
    return r1, r2


def even_model_basis(d1, d2, field):
    """The polynomials (x+d1)^6, (x+d1)^4(x+d2)^2, (x+d1)^2(x+d2)^4, (x+d2)^6."""
    l1 = UniPoly([d1, field.one], field)
    l2 = UniPoly([d2, field.one], field)
    return [l1 ** 6, l1 ** 4 * l2 ** 2, l1 ** 2 * l2 ** 4, l2 ** 6]


def _fraction_free_solve(rows, ncols, field):
    """Solve an overdetermined system [A | rhs] by fraction-free elimination.

    Raises Inconsistent when a zero row has a nonzero right-hand side.
    """
    rows = [list(r) for r in rows]
    zero = field.zero
    pivots = []
    prev = field.one
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != zero), None)
        if piv is None:
            raise Inconsistent(f"rank deficient in column {col}")
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(r + 1, len(rows)):
            ri = rows[i]
            rows[i] = [(pr[col] * ri[j] - ri[col] * pr[j]) / prev for j in range(ncols + 1)]
        prev = pr[col]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != zero:
            raise Inconsistent("overdetermined system has no solution")
    sol = [zero] * ncols
    for i in range(r - 1, -1, -1):
        acc = rows[i][ncols]
        for j in range(i + 1, ncols):
            acc = acc - rows[i][j] * sol[j]
        sol[i] = acc / rows[i][i]
    return sol


def solve_even_model(f: UniPoly, d1, d2):
    """Coefficients (c6, c4, c2, c0) with
    f = c6 (x+d1)^6 + c4 (x+d1)^4 (x+d2)^2 + c2 (x+d1)^2 (x+d2)^4 + c0 (x+d2)^6.
    """
    field = f.field
    d1, d2 = field(d1), field(d2)
    if d1 == d2:
        raise ValueError("d1 == d2")
    basis = even_model_basis(d1, d2, field)
    rows = [[bp[i] for bp in basis] + [f[i]] for i in range(7)]
    c6, c4, c2, c0 = _fraction_free_solve(rows, 4, field)
    check = basis[0] * c6 + basis[1] * c4 + basis[2] * c2 + basis[3] * c0
    if check != f:
        raise Inconsistent("even-model identity does not re-substitute")
    return c6, c4, c2, c0


class BiPoly:
    """Sparse polynomial in x, y: {(i, j): coefficient of x^i y^j}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_unipoly(cls, f: UniPoly):
        return cls({(i, 0): c for i, c in enumerate(f.coeffs)})

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly({(0, 0): other})
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({c})*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items(), reverse=True)]
        return " + ".join(parts)

    def _lift(self, other):
        return other if isinstance(other, BiPoly) else BiPoly({(0, 0): other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BiPoly({(0, 0): 1})
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x, y):
        """Evaluate at (x, y): Horner in y over rows that are Horner in x."""
        rows = {}
        for (i, j), c in self.terms.items():
            rows.setdefault(j, {})[i] = c
        total = 0
        for j in range(max(rows, default=0), -1, -1):
            row = rows.get(j, {})
            acc = 0
            for i in range(max(row, default=0), -1, -1):
                acc = acc * x + row.get(i, 0)
            total = total * y + acc
        return total
