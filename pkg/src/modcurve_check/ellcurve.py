"""Elliptic curves in general Weierstrass form over any exact field."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExceedsBound, PointNotOnCurve
from .poly import UniPoly


class ECPoint:
    """An affine point (x, y), or the point at infinity when x is None."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, ECPoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(None) if self.is_infinity else hash((self.x, self.y))

    def __repr__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()


class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over ``field``."""

    def __init__(self, a1, a2, a3, a4, a6, field):
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = (field(c) for c in (a1, a2, a3, a4, a6))
        if self.discriminant == 0:
            raise ValueError("singular Weierstrass equation")

    @classmethod
    def short(cls, a2, a4, a6, field):
        return cls(0, a2, 0, a4, a6, field)

    def __repr__(self):
        return (
            f"WeierstrassCurve([{self.a1}, {self.a2}, {self.a3}, {self.a4}, {self.a6}]"
            f" over {self.field})"
        )

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self):
        c4 = self.b2 * self.b2 - 24 * self.b4
        return c4 ** 3 / self.discriminant

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6

    def point(self, x, y) -> ECPoint:
        P = ECPoint(self.field(x), self.field(y))
        if not self.contains(P):
            raise PointNotOnCurve(f"{P} is not on {self}")
        return P

    def neg(self, P: ECPoint) -> ECPoint:
        if P.is_infinity:
            return P
        return ECPoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P, Q):
        return ec_add(self, P, Q)

    def mul(self, n, P):
        return ec_scalar_mul(self, n, P)


def _check(C, *points):
    for P in points:
        if not C.contains(P):
            raise PointNotOnCurve(f"{P} is not on {C}")


def _add_unchecked(C: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = C.ainvs
    if P.x == Q.x:
        if P.y + Q.y + a1 * Q.x + a3 == 0:
            return INFINITY
        lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / (2 * P.y + a1 * P.x + a3)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    nu = P.y - lam * P.x
    x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return ECPoint(x3, y3)


def ec_add(C: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    _check(C, P, Q)
    return _add_unchecked(C, P, Q)


def ec_scalar_mul(C: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    _check(C, P)
    if n < 0:
        return ec_scalar_mul(C, -n, C.neg(P))
    result, base = INFINITY, P
    while n:
        if n & 1:
            result = _add_unchecked(C, result, base)
        n >>= 1
        if n:
            base = _add_unchecked(C, base, base)
    return result


def point_order(C: WeierstrassCurve, P: ECPoint, bound: int) -> int:
    """Least n <= bound with nP = O; raises ExceedsBound otherwise."""
    _check(C, P)
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = _add_unchecked(C, Q, P)
    raise ExceedsBound(f"order of {P} exceeds {bound}")


def lift_x(C: WeierstrassCurve, x0) -> list[ECPoint]:
    """All points of C over its field with x-coordinate x0 (0, 1 or 2 of them)."""
    F = C.field
    x0 = F(x0)
    a1, a2, a3, a4, a6 = C.ainvs
    h = a1 * x0 + a3
    rhs = x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6
    disc = h * h + 4 * rhs
    t = F.sqrt(disc)
    if t is None:
        return []
    pts = [ECPoint(x0, (-h + t) / 2), ECPoint(x0, (-h - t) / 2)]
    if pts[0] == pts[1]:
        return pts[:1]
    return pts


def division_polynomial(C: WeierstrassCurve, n: int) -> UniPoly:
    """psi_n for odd n as a polynomial in x (curve y^2 = x^3 + a2 x^2 + a4 x + a6)."""
    if C.a1 != 0 or C.a3 != 0:
        raise ValueError("division polynomials are implemented only for a1 = a3 = 0")
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    F = C.field
    b2, b4, b6, b8 = C.b2, C.b4, C.b6, C.b8
    # (2y)^2 as a polynomial in x
    four_rhs = UniPoly([4 * C.a6, 4 * C.a4, 4 * C.a2, 4], F)
    four_rhs_sq = four_rhs * four_rhs
    # g_k = psi_k for odd k, psi_k / psi_2 for even k
    g = {
        0: UniPoly.zero(F),
        1: UniPoly.one(F),
        2: UniPoly.one(F),
        3: UniPoly([b8, 3 * b6, 3 * b4, b2, 3], F),
        4: UniPoly(
            [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2], F
        ),
    }

    def get(k):
        if k in g:
            return g[k]
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                val = four_rhs_sq * get(m + 2) * get(m) ** 3 - get(m - 1) * get(m + 1) ** 3
            else:
                val = get(m + 2) * get(m) ** 3 - four_rhs_sq * get(m - 1) * get(m + 1) ** 3
        else:
            val = get(m) * (get(m + 2) * get(m - 1) ** 2 - get(m - 2) * get(m + 1) ** 2)
        g[k] = val
        return val

    return get(n)


@dataclass(frozen=True)
class CubicModel:
    """y^2 = c3 x^3 + c2 x^2 + c1 x + c0, the genus-1 quotient of an even sextic."""

    c3: object
    c2: object
    c1: object
    c0: object

    def rhs(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def contains(self, P: ECPoint) -> bool:
        return P.is_infinity or P.y * P.y == self.rhs(P.x)


@dataclass(frozen=True)
class ScalingMap:
    """(x, y) -> (k x, k y) between a cubic model and its monic Weierstrass form."""

    k: object

    def forward(self, P: ECPoint) -> ECPoint:
        if P.is_infinity:
            return P
        return ECPoint(self.k * P.x, self.k * P.y)

    def inverse(self, P: ECPoint) -> ECPoint:
        if P.is_infinity:
            return P
        return ECPoint(P.x / self.k, P.y / self.k)


def monic_scaling(c6, c4, c2, c0, field):
    """From y^2 = c6 x^3 + c4 x^2 + c2 x + c0 build y^2 = x^3 + c4 x^2 + c2 c6 x + c0 c6^2.

    Returns (curve, map) where map.forward is (x, y) -> (c6 x, c6 y).
    """
    c6, c4, c2, c0 = (field(c) for c in (c6, c4, c2, c0))
    if c6 == 0:
        raise ValueError("leading coefficient c6 must be nonzero")
    curve = WeierstrassCurve.short(c4, c2 * c6, c0 * c6 * c6, field)
    return curve, ScalingMap(c6)
