from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import brute_torsion_x

from modcurve_check.arith import GF, QQ, extension_field
from modcurve_check.ellcurve import (
    INFINITY,
    CubicModel,
    ECPoint,
    WeierstrassCurve,
    division_polynomial,
    lift_x,
    monic_scaling,
    point_order,
)
from modcurve_check.errors import ExceedsBound, PointNotOnCurve


def e37():
    return WeierstrassCurve(0, 0, 1, -1, 0, QQ)


def test_e37_group_law_examples():
    E = e37()
    G = E.point(0, 0)
    assert E.add(G, G) == ECPoint(1, 0)
    assert E.add(G, ECPoint(1, 0)) == ECPoint(-1, -1)
    assert E.mul(4, G) == ECPoint(2, -3)
    assert E.mul(5, G) == ECPoint(Fraction(1, 4), Fraction(-5, 8))
    assert E.add(G, E.neg(G)) == INFINITY
    assert E.mul(-1, G) == E.neg(G) == ECPoint(0, -1)
    assert E.mul(0, G) == INFINITY


def test_e37_invariants():
    E = e37()
    assert E.discriminant == 37
    assert E.j_invariant == Fraction(110592, 37)


def test_point_checks():
    E = e37()
    with pytest.raises(PointNotOnCurve):
        E.point(0, 2)
    with pytest.raises(PointNotOnCurve):
        E.add(ECPoint(0, 2), ECPoint(0, 0))
    with pytest.raises(ValueError):
        WeierstrassCurve.short(0, 0, 0, QQ)


def test_lift_x():
    E = e37()
    assert set(lift_x(E, 0)) == {ECPoint(0, 0), ECPoint(0, -1)}
    assert lift_x(E, 3) == []  # 4*24 + 1 = 97 is not a square


def test_point_order_bound():
    E = e37()
    with pytest.raises(ExceedsBound):
        point_order(E, E.point(0, 0), 12)
    F = GF(7)
    C = WeierstrassCurve.short(F(0), F(0), F(1), F)  # y^2 = x^3 + 1
    assert point_order(C, ECPoint(F(0), F(1)), 10) == 3
    assert point_order(C, ECPoint(F(6), F(0)), 10) == 2


def curves_over(p):
    F = GF(p)
    out = []
    for a2 in range(p):
        for a4 in range(p):
            for a6 in range(0, p, 2):
                try:
                    out.append(WeierstrassCurve.short(F(a2), F(a4), F(a6), F))
                except ValueError:
                    pass
    return out


def all_points(C):
    F = C.field
    pts = [INFINITY]
    for x in F.elements():
        pts += lift_x(C, x)
    return pts


@given(st.sampled_from(curves_over(7)), st.data())
def test_group_axioms_over_finite_field(C, data):
    pts = all_points(C)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert C.add(P, Q) == C.add(Q, P)
    assert C.add(C.add(P, Q), R) == C.add(P, C.add(Q, R))
    assert C.add(P, INFINITY) == P
    assert C.add(P, C.neg(P)) == INFINITY
    n = len(pts)
    assert C.mul(n, P) == INFINITY  # Lagrange


def test_hasse_bound():
    for C in curves_over(11)[:40]:
        n = len(all_points(C))
        assert (n - 12) ** 2 <= 4 * 11


@given(st.integers(1, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_monic_scaling_is_isomorphism(c6, c4, c2, c0):
    model = CubicModel(QQ(c6), QQ(c4), QQ(c2), QQ(c0))
    try:
        E, phi = monic_scaling(c6, c4, c2, c0, QQ)
    except ValueError:
        return
    for x in range(-5, 6):
        rhs = model.rhs(QQ(x))
        y = QQ.sqrt(rhs)
        if y is None:
            continue
        P = ECPoint(QQ(x), y)
        assert model.contains(P)
        Q = phi.forward(P)
        assert E.contains(Q) and phi.inverse(Q) == P


def test_division_polynomial_small_cases():
    F = GF(11)
    C = WeierstrassCurve.short(F(0), F(1), F(3), F)
    assert division_polynomial(C, 1) == division_polynomial(C, 1).one(F)
    assert division_polynomial(C, 3).degree == 4
    assert division_polynomial(C, 5).degree == 12
    assert division_polynomial(C, 7).degree == 24


def test_division_polynomial_rejects():
    C = e37()
    with pytest.raises(ValueError):
        division_polynomial(C, 3)  # a3 != 0
    F = GF(11)
    with pytest.raises(ValueError):
        division_polynomial(WeierstrassCurve.short(F(0), F(1), F(3), F), 4)


def test_division_polynomial_over_q_3_torsion():
    # y^2 = x^3 + 1 has the 3-torsion point (0, 1); psi_3 = 3x^4 + 12x
    C = WeierstrassCurve.short(QQ(0), QQ(0), QQ(1), QQ)
    psi = division_polynomial(C, 3)
    assert psi(QQ(0)) == 0 and point_order(C, ECPoint(QQ(0), QQ(1)), 5) == 3


@pytest.mark.parametrize("q", [(5, 1), (7, 1), (13, 1), (3, 2), (5, 2)])
@pytest.mark.parametrize("n", [3, 5, 7])
def test_division_polynomial_matches_brute_force(q, n):
    p, k = q
    F = extension_field(p, k)
    count = 0
    for c in [(1, 2, 3), (0, 1, 1), (2, 0, 3), (1, 1, 0), (3, 4, 1)]:
        try:
            C = WeierstrassCurve.short(F(c[0]), F(c[1]), F(c[2]), F)
        except ValueError:
            continue
        psi = division_polynomial(C, n)
        roots = {x for x in F.elements() if psi(x).is_zero()}
        assert roots == brute_torsion_x(C, n)
        count += 1
    assert count >= 3
