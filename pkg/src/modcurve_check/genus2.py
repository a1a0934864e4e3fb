"""Genus-2 curves with a degree-6 model and their Jacobians.

Divisor classes on y^2 = f(x), deg f = 6 with square leading coefficient,
are stored in balanced Mumford form (a, b, n): the class of

    E - (inf+ + inf-),   E = div(a, b) + n*inf+ + (2 - deg a - n)*inf-,

with a monic of degree <= 2, deg b < deg a, b^2 = f mod a and
0 <= n <= 2 - deg a.  Every class has exactly one such representative, so
equality of classes is equality of triples.  inf+ is the point at infinity
where y/x^3 tends to +sqrt(lc f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadReduction, ClosureBoundExceeded, PointNotOnCurve
from .poly import UniPoly, discriminant, xgcd


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or a point at infinity with ``inf`` = +1 / -1."""

    x: object = None
    y: object = None
    inf: int = 0

    @classmethod
    def infinity(cls, sign: int) -> "CurvePoint":
        return cls(None, None, 1 if sign > 0 else -1)

    @property
    def is_infinite(self) -> bool:
        return self.inf != 0

    def __repr__(self):
        if self.inf:
            return "inf+" if self.inf > 0 else "inf-"
        return f"({self.x}, {self.y})"


class HyperCurve:
    """y^2 + h(x) y = g(x), genus 2 (h = 0 gives the usual y^2 = f(x)).

    ``f`` is always the completed square g + h^2/4, of degree 6.
    """

    def __init__(self, f: UniPoly, h: UniPoly | None = None):
        self.field = f.field
        if h is None or h.is_zero():
            self.g = f
            self.h = None
            self.f = f
        else:
            self.g = f
            self.h = h
            self.f = f + h * h / 4
        if self.f.degree != 6:
            raise ValueError("expected a degree-6 model")
        if discriminant(self.f) == 0:
            raise ValueError("singular model")
        self._vplus = None

    def __repr__(self):
        if self.h is None:
            return f"y^2 = {self.f}"
        return f"y^2 + ({self.h})*y = {self.g}"

    @property
    def leading_sqrt(self):
        return self.field.sqrt(self.f.lc)

    def vplus(self) -> UniPoly:
        """The cubic V with y - V vanishing at inf+ (deg(f - V^2) <= 2)."""
        if self._vplus is None:
            F = self.field
            s = self.leading_sqrt
            if s is None:
                raise ValueError("points at infinity are not rational")
            f = self.f
            v = [F.zero] * 4
            v[3] = s
            for k in (2, 1, 0):
                # coefficient of x^(3+k) in V^2 must equal f's
                acc = f[3 + k]
                for i in range(k + 1, 4):
                    j = 3 + k - i
                    if k < j <= 3:
                        acc = acc - v[i] * v[j]
                v[k] = acc / (2 * s)
            self._vplus = UniPoly(v, F, _trusted=True)
            assert (f - self._vplus * self._vplus).degree <= 2
        return self._vplus

    def infinite_points(self) -> list[CurvePoint]:
        if self.leading_sqrt is None:
            return []
        return [CurvePoint.infinity(+1), CurvePoint.infinity(-1)]

    def hyperelliptic_conjugate(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinite:
            return CurvePoint.infinity(-P.inf)
        if self.h is None:
            return CurvePoint(P.x, -P.y)
        return CurvePoint(P.x, -P.y - self.h(P.x))


def on_curve(C: HyperCurve, P: CurvePoint) -> bool:
    if P.is_infinite:
        return C.leading_sqrt is not None
    x, y = P.x, P.y
    if C.h is None:
        return y * y == C.f(x)
    return y * y + C.h(x) * y == C.g(x)


# -- Mumford classes ------------------------------------------------------------


@dataclass(frozen=True)
class MumfordClass:
    a: UniPoly
    b: UniPoly
    n: int

    def key(self):
        return (self.a.degree, self.n, tuple(map(repr, self.a.coeffs)), tuple(map(repr, self.b.coeffs)))

    def __repr__(self):
        return f"[{self.a}, {self.b}, {self.n}]"


def identity(C: HyperCurve) -> MumfordClass:
    F = C.field
    return MumfordClass(UniPoly.one(F), UniPoly.zero(F), 1)


def is_valid(C: HyperCurve, D: MumfordClass) -> bool:
    a, b = D.a, D.b
    return (
        a.lc == C.field.one
        and 0 <= a.degree <= 2
        and b.degree < a.degree
        and 0 <= D.n <= 2 - a.degree
        and ((C.f - b * b) % a).is_zero()
    )


def abel_jacobi(C: HyperCurve, P: CurvePoint) -> MumfordClass:
    """The class of P - inf-, where inf- = inf_1 = (1 : -1 : 0)."""
    if C.h is not None:
        raise ValueError("Jacobian arithmetic needs a model with h = 0")
    if not on_curve(C, P):
        raise PointNotOnCurve(f"{P} is not on {C}")
    F = C.field
    if P.is_infinite:
        if P.inf < 0:
            return identity(C)
        return MumfordClass(UniPoly.one(F), UniPoly.zero(F), 2)
    return MumfordClass(UniPoly([-P.x, F.one], F), UniPoly([P.y], F), 1)


def _pole_order(w: UniPoly, V: UniPoly, f: UniPoly) -> int:
    """Order of pole of y - w at the point at infinity where y ~ V."""
    diff = w - V
    if diff.is_zero():
        return (f - V * V).degree - 3
    return diff.degree


def _compose(C: HyperCurve, D1: MumfordClass, D2: MumfordClass):
    f = C.f
    u1, v1, u2, v2 = D1.a, D1.b, D2.a, D2.b
    d0, e1, e2 = xgcd(u1, u2)
    if d0.degree == 0:
        d, c1, c2 = d0, UniPoly.one(C.field), UniPoly.zero(C.field)
    else:
        d, c1, c2 = xgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)).exact_div(d)) % u
    dd = d.degree
    n_plus = D1.n + D2.n + dd
    n_minus = (2 - u1.degree - D1.n) + (2 - u2.degree - D2.n) + dd
    return u, v, n_plus, n_minus


def _reduce(C: HyperCurve, u: UniPoly, v: UniPoly, n_plus: int, n_minus: int) -> MumfordClass:
    """Reduce div(u, v) + n_plus inf+ + n_minus inf- - 2(inf+ + inf-) (total degree 4)."""
    f = C.f
    Vp = C.vplus()
    for _ in range(8):
        if n_plus >= 1 and n_minus >= 1 and u.degree <= 2:
            return MumfordClass(u, v % u, n_plus - 1)
        V = Vp if n_plus >= n_minus else -Vp
        w = V + (v - V) % u
        N = f - w * w
        u_new = N.exact_div(u).monic()
        p_plus = _pole_order(w, Vp, f)
        p_minus = _pole_order(w, -Vp, f)
        assert p_plus + p_minus == N.degree, "pole bookkeeping mismatch"
        n_plus += p_plus - u_new.degree
        n_minus += p_minus - u_new.degree
        assert n_plus >= 0 and n_minus >= 0
        u, v = u_new, (-w) % u_new
    raise AssertionError("reduction did not terminate")


def jac_add(C: HyperCurve, D1: MumfordClass, D2: MumfordClass) -> MumfordClass:
    u, v, n_plus, n_minus = _compose(C, D1, D2)
    return _reduce(C, u, v, n_plus, n_minus)


def jac_neg(C: HyperCurve, D: MumfordClass) -> MumfordClass:
    return MumfordClass(D.a, (-D.b) % D.a, 2 - D.a.degree - D.n)


def jac_mul(C: HyperCurve, k: int, D: MumfordClass) -> MumfordClass:
    if k < 0:
        return jac_mul(C, -k, jac_neg(C, D))
    result, base = identity(C), D
    while k:
        if k & 1:
            result = jac_add(C, result, base)
        k >>= 1
        if k:
            base = jac_add(C, base, base)
    return result


def class_order(C: HyperCurve, D: MumfordClass, bound: int = 10_000) -> int:
    zero = identity(C)
    acc = D
    for n in range(1, bound + 1):
        if acc == zero:
            return n
        acc = jac_add(C, acc, D)
    raise ClosureBoundExceeded(f"order exceeds {bound}")


def subgroup_closure(C: HyperCurve, gens, bound: int = 10_000) -> list[MumfordClass]:
    """The subgroup generated by ``gens``, in a deterministic order.

    Generators are taken in input order; a generator already in the current
    subgroup H is skipped, otherwise H is replaced by H + <g>, enumerated coset
    by coset (H, H + g, H + 2g, ...).  Raises ClosureBoundExceeded once the
    subgroup would exceed ``bound`` elements.
    """
    elems = [identity(C)]
    seen = {elems[0]}
    for g in gens:
        if g in seen:
            continue
        base = list(elems)
        rep = g
        while rep not in seen:
            coset = [jac_add(C, h, rep) for h in base]
            for e in coset:
                if e in seen:
                    raise AssertionError("cosets overlap: inconsistent group law")
                seen.add(e)
            elems.extend(coset)
            if len(elems) > bound:
                raise ClosureBoundExceeded(f"subgroup exceeds {bound} elements")
            rep = jac_add(C, rep, g)
    return elems


def count_deg_lt2(classes) -> int:
    return sum(1 for D in classes if D.a.degree < 2)


# -- finite fields ----------------------------------------------------------------


def curve_count(C: HyperCurve) -> int:
    """Number of points on the smooth model over the (finite) field of C."""
    F = C.field
    f = C.f
    total = 0
    for x in F.elements():
        fx = f(x)
        if fx.is_zero():
            total += 1
        elif F.is_square(fx):
            total += 2
    if F.is_square(f.lc):
        total += 2
    return total


def base_change(C: HyperCurve, field) -> HyperCurve:
    f = UniPoly([field(c) for c in C.f.coeffs], field, _trusted=True)
    return HyperCurve(f)


def l_polynomial(q: int, n1: int, n2: int) -> UniPoly:
    """L(T) of a genus-2 curve over F_q from |C(F_q)| and |C(F_{q^2})|."""
    from .arith import QQ

    p1 = q + 1 - n1
    p2 = q * q + 1 - n2
    e1 = p1
    e2 = Fraction(p1 * p1 - p2, 2)
    return UniPoly([1, -e1, e2, -q * e1, q * q], QQ)


def jacobian_order(C: HyperCurve, k: int) -> int:
    """|J(F_{p^k})| for C over a prime field F_p via the L-polynomial."""
    from .arith import QQ, extension_field
    from .poly import resultant

    F = C.field
    if F.degree != 1:
        raise ValueError("jacobian_order expects a curve over a prime field")
    p = F.p
    n1 = curve_count(C)
    n2 = curve_count(base_change(C, extension_field(p, 2)))
    L = l_polynomial(p, n1, n2)
    tk = UniPoly([-1] + [0] * (k - 1) + [1], QQ)
    val = resultant(tk, L)
    if val.denominator != 1:
        raise ArithmeticError("non-integral Jacobian order")
    return int(val)


# -- reduction modulo primes -----------------------------------------------------


def bad_primes(C: HyperCurve) -> set[int]:
    """Primes dividing the discriminant of f (plus 2), for models over Q or K."""
    import sympy

    from .arith import K, NFElement

    disc = discriminant(C.f)
    if isinstance(disc, NFElement):
        norm = _nf_norm(disc)
    else:
        norm = Fraction(disc)
    primes = set(sympy.factorint(abs(norm.numerator))) | set(sympy.factorint(norm.denominator))
    for c in C.f.coeffs:
        den = c.den if isinstance(c, NFElement) else Fraction(c).denominator
        primes |= set(sympy.factorint(den))
    return primes | {2}


def _nf_norm(x) -> Fraction:
    from .arith import QQ
    from .poly import resultant

    K = x.field
    num = UniPoly([Fraction(c) for c in x.num], QQ)
    return resultant(K.minpoly, num) / Fraction(x.den) ** K.degree


def reduce_curve(C: HyperCurve, p: int, factor) -> HyperCurve:
    from .arith import NFElement, field_from_factor, residue_reduce

    if p in bad_primes(C):
        raise BadReduction(f"the model has bad reduction at {p}")
    F = field_from_factor(factor)

    def red(c):
        if isinstance(c, NFElement):
            return residue_reduce(c, p, factor, F)
        return F(c)

    return HyperCurve(UniPoly([red(c) for c in C.f.coeffs], F, _trusted=True))


def reduce_class(D: MumfordClass, p: int, factor, C: HyperCurve | None = None) -> MumfordClass:
    """Coefficientwise reduction of a class modulo the prime (p, factor)."""
    from .arith import NFElement, field_from_factor, residue_reduce

    if C is not None and p in bad_primes(C):
        raise BadReduction(f"the model has bad reduction at {p}")
    F = field_from_factor(factor)

    def red(c):
        if isinstance(c, NFElement):
            return residue_reduce(c, p, factor, F)
        return F(c)

    a = UniPoly([red(c) for c in D.a.coeffs], F, _trusted=True)
    b = UniPoly([red(c) for c in D.b.coeffs], F, _trusted=True)
    return MumfordClass(a, b, D.n)
