import pytest
from hypothesis import given, settings, strategies as st

from modcurve_check import reference_data as ref
from modcurve_check.arith import GF, QQ, K, QuadraticExtension
from modcurve_check.bielliptic import (
    NotAnInvolution,
    build_even_model,
    on_source,
    pullback_fiber,
    quotient_point,
)
from modcurve_check.ellcurve import INFINITY, ECPoint
from modcurve_check.errors import DegenerateInvolution, Inconsistent
from modcurve_check.genus2 import CurvePoint, HyperCurve
from modcurve_check.pipelines.x13 import x13_cusps
from modcurve_check.poly import MoebiusMap, UniPoly, even_model_basis

P = 101
F = GF(P)


def even_curve(field, cs, d1=-2, d2=0):
    """c6 (x+d1)^6 + c4 (x+d1)^4 (x+d2)^2 + ... with x -> x/(x-1) as the involution."""
    basis = even_model_basis(field(d1), field(d2), field)
    f = sum((b * field(c) for b, c in zip(basis, cs)), UniPoly.zero(field))
    return HyperCurve(f), MoebiusMap(field(1), field(0), field(1), field(-1))


def test_x13_even_model():
    emd = build_even_model(HyperCurve(ref.x13_polynomial()), ref.x13_involution())
    assert {emd.d1, emd.d2} == {ref.D1, ref.D2}
    assert emd.coefficients == (ref.EVEN_C6, ref.EVEN_C4, ref.EVEN_C2, ref.EVEN_C0)


def test_x37_even_model():
    C = HyperCurve(UniPoly(ref.X37_G, QQ), UniPoly.x(QQ) ** 3)
    emd = build_even_model(C, ref.x37_involution())
    assert emd.coefficients == ref.X37_EVEN


def test_rejects_bad_maps():
    C, _ = even_curve(QQ, (1, 2, 3, 5))
    with pytest.raises(NotAnInvolution):
        build_even_model(C, MoebiusMap(QQ(1), QQ(1), QQ(0), QQ(1)))  # x -> x + 1
    with pytest.raises(DegenerateInvolution):
        build_even_model(C, MoebiusMap(QQ(0), QQ(1), QQ(1), QQ(0)))  # x -> 1/x, p = 0
    with pytest.raises(Inconsistent):
        build_even_model(C, MoebiusMap(QQ(1), QQ(3), QQ(1), QQ(-1)))  # does not preserve f


def test_recovers_known_even_model_over_q():
    C, M = even_curve(QQ, (1, 2, 3, 5))
    emd = build_even_model(C, M)
    assert (emd.d1, emd.d2) == (-2, 0)
    assert emd.coefficients == (1, 2, 3, 5)


def _points(C):
    pts = C.infinite_points()
    for x in F.elements():
        y = F.sqrt(C.f(x))
        if y is not None:
            pts += [CurvePoint(x, y)] if y.is_zero() else [CurvePoint(x, y), CurvePoint(x, -y)]
    return pts


coeffs = st.tuples(*[st.integers(1, P - 1)] * 4).filter(lambda c: sum(c) % P)


@settings(max_examples=15)
@given(coeffs)
def test_quotient_and_pullback_round_trip(cs):
    try:
        C, M = even_curve(F, cs)
    except ValueError:
        return
    emd = build_even_model(C, M)
    E, phi = emd.monic_quotient()
    model = emd.quotient()
    for Pt in _points(C):
        Q = quotient_point(emd, Pt)
        assert model.contains(Q)
        assert E.contains(phi.forward(Q))
        fiber = pullback_fiber(emd, phi.forward(Q), phi)
        assert sum(fp.multiplicity for fp in fiber) == 2
        assert all(on_source(emd, fp) for fp in fiber)
        assert Pt in [fp.point for fp in fiber]


@settings(max_examples=10)
@given(coeffs)
def test_fiber_over_origin_has_x_minus_d2(cs):
    try:
        C, M = even_curve(F, cs)
    except ValueError:
        return
    emd = build_even_model(C, M)
    fiber = pullback_fiber(emd, INFINITY)
    assert sum(fp.multiplicity for fp in fiber) == 2
    for fp in fiber:
        assert not fp.point.is_infinite
        assert fp.point.x == fp.field(-emd.d2)
        assert on_source(emd, fp)


def test_x13_cusps_lie_in_their_fibers():
    C = HyperCurve(ref.x13_polynomial())
    emd = build_even_model(C, ref.x13_involution())
    E, phi = emd.monic_quotient()
    for cusp in x13_cusps():
        Q = quotient_point(emd, cusp)
        fiber = pullback_fiber(emd, phi.forward(Q), phi)
        assert cusp in [fp.point for fp in fiber]


def test_quadratic_fibers_are_conjugate():
    # the quotient y^2 = x^3 + 2x^2 + 3x + 3 contains (2, 5); X^2 = 2 is not rational
    C, M = even_curve(QQ, (1, 2, 3, 3))
    emd = build_even_model(C, M)
    model = emd.quotient()
    found = 0
    for x in range(-10, 40):
        rhs = model.rhs(QQ(x))
        y = QQ.sqrt(rhs)
        if y is None or QQ.sqrt(QQ(x)) is not None:
            continue
        fiber = pullback_fiber(emd, ECPoint(QQ(x), y))
        assert len(fiber) == 2 and all(fp.is_quadratic for fp in fiber)
        P1, P2 = fiber[0].point, fiber[1].point
        assert (P1.x.conjugate(), P1.y.conjugate()) == (P2.x, P2.y)
        assert all(on_source(emd, fp) for fp in fiber)
        found += 1
    assert found
