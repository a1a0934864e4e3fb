"""Even sextic models of bielliptic genus-2 curves, their genus-1 quotients
and fibres of the quotient map."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import QuadraticExtension
from .ellcurve import CubicModel, ECPoint, INFINITY, ScalingMap, monic_scaling
from .errors import DegenerateInvolution, Inconsistent, PointNotOnCurve
from .genus2 import CurvePoint, HyperCurve, on_curve
from .poly import (
    MoebiusMap,
    moebius_is_involution,
    moebius_transform_sextic,
    proportionality,
    solve_d_pair,
    solve_even_model,
)


class NotAnInvolution(DegenerateInvolution):
    pass


@dataclass(frozen=True)
class EvenModelData:
    """Y^2 = c6 X^6 + c4 X^4 + c2 X^2 + c0 with X = (x+d1)/(x+d2), Y = y/(x+d2)^3."""

    source: HyperCurve
    M: MoebiusMap
    d1: object
    d2: object
    c6: object
    c4: object
    c2: object
    c0: object

    @property
    def field(self):
        return self.source.field

    @property
    def coefficients(self):
        return (self.c6, self.c4, self.c2, self.c0)

    def quotient(self) -> CubicModel:
        return CubicModel(self.c6, self.c4, self.c2, self.c0)

    def monic_quotient(self):
        return monic_scaling(self.c6, self.c4, self.c2, self.c0, self.field)


@dataclass
class FiberPoint:
    point: CurvePoint
    field: object
    multiplicity: int = 1
    is_cusp: bool = False

    @property
    def is_quadratic(self) -> bool:
        return isinstance(self.field, QuadraticExtension)


def build_even_model(C: HyperCurve, M: MoebiusMap, order_key=None) -> EvenModelData:
    F = C.field
    if not moebius_is_involution(M):
        raise NotAnInvolution(f"{M} is not an involution")
    if M.p == 0:
        raise DegenerateInvolution("involution with p = 0 is not handled")
    if proportionality(moebius_transform_sextic(C.f, M), C.f) is None:
        raise Inconsistent("the map does not preserve the branch locus of f")
    b, c = M.q / M.p, M.r / M.p
    d1, d2 = solve_d_pair(b, c, F, order_key)
    c6, c4, c2, c0 = solve_even_model(C.f, d1, d2)
    return EvenModelData(C, M, d1, d2, c6, c4, c2, c0)


def quotient_point(emd: EvenModelData, P: CurvePoint) -> ECPoint:
    """Image of P on y^2 = c6 x^3 + c4 x^2 + c2 x + c0 under (x, y) -> (X^2, Y)."""
    C = emd.source
    if not on_curve(C, P):
        raise PointNotOnCurve(f"{P} is not on {C}")
    if P.is_infinite:
        s = C.leading_sqrt
        return ECPoint(emd.field.one, s if P.inf > 0 else -s)
    t = P.x + emd.d2
    if t == 0:
        return INFINITY
    X = (P.x + emd.d1) / t
    Y = P.y / (t * t * t)
    return ECPoint(X * X, Y)


def _from_even_coords(emd: EvenModelData, X, Y, field):
    one = field.one
    if X == one:
        s = emd.source.leading_sqrt
        return CurvePoint.infinity(+1 if Y == s else -1)
    x = (emd.d1 - emd.d2 * X) / (X - one)
    t = x + emd.d2
    return CurvePoint(x, Y * t * t * t)


def pullback_fiber(emd: EvenModelData, Q: ECPoint, scaling: ScalingMap | None = None):
    """Preimages on the source curve of a point on the quotient (or on its
    monic form, when ``scaling`` is given).  Each fibre has total multiplicity 2.
    """
    F = emd.field
    if scaling is not None:
        Q = scaling.inverse(Q)
    if Q.is_infinity:
        # X = infinity: the two points with x = -d2
        x0 = -emd.d2
        fx = emd.source.f(x0)
        r = F.sqrt(fx)
        if r is None:
            ext = QuadraticExtension(F, fx)
            root = ext.sqrt_radicand()
            return [
                FiberPoint(CurvePoint(ext(x0), root), ext),
                FiberPoint(CurvePoint(ext(x0), -root), ext),
            ]
        if r == 0:
            return [FiberPoint(CurvePoint(x0, r), F, multiplicity=2)]
        return [FiberPoint(CurvePoint(x0, r), F), FiberPoint(CurvePoint(x0, -r), F)]
    r = F.sqrt(Q.x)
    if r is None:
        ext = QuadraticExtension(F, Q.x)
        X = ext.sqrt_radicand()
        Y = ext(Q.y)
        return [
            FiberPoint(_from_even_coords(emd, X, Y, ext), ext),
            FiberPoint(_from_even_coords(emd, -X, Y, ext), ext),
        ]
    if r == 0:
        return [FiberPoint(_from_even_coords(emd, r, Q.y, F), F, multiplicity=2)]
    return [
        FiberPoint(_from_even_coords(emd, r, Q.y, F), F),
        FiberPoint(_from_even_coords(emd, -r, Q.y, F), F),
    ]


def on_source(emd: EvenModelData, fp: FiberPoint) -> bool:
    """Exact model-equation check in the point's field of definition."""
    P = fp.point
    if P.is_infinite:
        return emd.source.leading_sqrt is not None
    f = emd.source.f
    return P.y * P.y == f(P.x)
