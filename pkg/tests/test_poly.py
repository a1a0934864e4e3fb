from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from modcurve_check import reference_data as ref
from modcurve_check.arith import GF, QQ, K
from modcurve_check.errors import DegenerateInvolution, Inconsistent, NotSplit
from modcurve_check.poly import (
    BiPoly,
    MoebiusMap,
    UniPoly,
    discriminant,
    even_model_basis,
    gcd,
    moebius_is_involution,
    moebius_transform_sextic,
    proportionality,
    resultant,
    solve_d_pair,
    solve_even_model,
    xgcd,
)

ints = st.integers(-9, 9)
qpolys = st.lists(ints, min_size=1, max_size=7).map(lambda cs: UniPoly([QQ(c) for c in cs], QQ))


def qp(*cs):
    return UniPoly([QQ(c) for c in cs], QQ)


def to_sympy(f):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in f.coeffs])), x)


@given(qpolys, qpolys, qpolys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == UniPoly.zero(QQ)


@given(qpolys, qpolys)
def test_division_algorithm(f, g):
    assume(not g.is_zero())
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(qpolys, qpolys)
def test_xgcd_bezout(f, g):
    assume(not (f.is_zero() and g.is_zero()))
    d, s, t = xgcd(f, g)
    assert s * f + t * g == d
    assert (f % d).is_zero() and (g % d).is_zero()
    assert gcd(f, g) == d.monic()


def test_discriminant_examples():
    assert discriminant(qp(-1, 0, 1)) == 4
    assert discriminant(qp(1, 1, 1)) == -3
    assert discriminant(UniPoly(ref.X13_F, QQ)) == -692224


@given(st.lists(ints, min_size=3, max_size=7).filter(lambda cs: cs[-1] != 0))
def test_discriminant_matches_sympy(cs):
    f = UniPoly([QQ(c) for c in cs], QQ)
    assert discriminant(f) == Fraction(str(sympy.discriminant(to_sympy(f))))


@given(st.lists(ints, min_size=3, max_size=4).filter(lambda cs: cs[-1] != 0),
       st.lists(ints, min_size=3, max_size=4).filter(lambda cs: cs[-1] != 0))
def test_discriminant_of_product(a, b):
    f, g = UniPoly([QQ(c) for c in a], QQ), UniPoly([QQ(c) for c in b], QQ)
    assert discriminant(f * g) == discriminant(f) * discriminant(g) * resultant(f, g) ** 2


def test_discriminant_over_k():
    f = ref.x13_polynomial()
    assert discriminant(f) == K(-692224)


def test_moebius_involutions():
    assert moebius_is_involution(MoebiusMap(QQ(0), QQ(1), QQ(1), QQ(0)))  # x -> 1/x
    assert moebius_is_involution(MoebiusMap(QQ(-1), QQ(0), QQ(0), QQ(1)))  # x -> -x
    assert not moebius_is_involution(MoebiusMap(QQ(1), QQ(1), QQ(0), QQ(1)))  # x -> x+1
    assert not moebius_is_involution(MoebiusMap(QQ(2), QQ(0), QQ(0), QQ(2)))  # identity
    assert moebius_is_involution(ref.x13_involution())
    assert moebius_is_involution(ref.x37_involution())
    with pytest.raises(ValueError):
        MoebiusMap(QQ(1), QQ(2), QQ(2), QQ(4))


moebius = st.tuples(ints, ints, ints, ints).filter(lambda t: t[0] * t[3] != t[1] * t[2]).map(
    lambda t: MoebiusMap(*(QQ(c) for c in t))
)
sextics = st.lists(ints, min_size=7, max_size=7).filter(lambda cs: cs[-1] != 0).map(
    lambda cs: UniPoly([QQ(c) for c in cs], QQ)
)


@given(sextics, moebius, moebius)
def test_transform_cocycle(f, m1, m2):
    # transforming by m1 then m2 equals transforming by m1 o m2
    g = moebius_transform_sextic(f, m1)
    assume(g.degree == 6)
    assert moebius_transform_sextic(g, m2) == moebius_transform_sextic(f, m1.compose(m2))


def test_x13_involution_preserves_f():
    f = ref.x13_polynomial()
    lam = proportionality(moebius_transform_sextic(f, ref.x13_involution()), f)
    assert lam is not None


def test_proportionality():
    f = qp(1, 2, 3)
    assert proportionality(f * QQ(5), f) == 5
    assert proportionality(qp(1, 2, 4), f) is None


def test_solve_d_pair_examples():
    assert set(solve_d_pair(0, 1, QQ)) == {0, -2}
    with pytest.raises(DegenerateInvolution):
        solve_d_pair(1, 0, QQ)
    with pytest.raises(NotSplit):
        solve_d_pair(1, 1, QQ)  # t^2 + 2t - 1, disc 8


@given(ints, ints.filter(bool))
def test_solve_d_pair_vieta(b, c):
    try:
        d1, d2 = solve_d_pair(b, c, QQ)
    except NotSplit:
        return
    assert d1 + d2 == Fraction(-2, c)
    assert d1 * d2 == Fraction(-b, c)
    assert d1 <= d2


def test_solve_d_pair_x13():
    d1, d2 = solve_d_pair(ref.INVOLUTION_B, ref.INVOLUTION_C, K)
    assert {d1, d2} == {ref.D1, ref.D2}
    assert K.order_key(d1) < K.order_key(d2)


@given(st.lists(ints, min_size=4, max_size=4), ints, ints)
def test_even_model_round_trip(cs, d1, d2):
    assume(d1 != d2)
    basis = even_model_basis(QQ(d1), QQ(d2), QQ)
    f = sum((b * QQ(c) for b, c in zip(basis, cs)), UniPoly.zero(QQ))
    assume(f.degree == 6)
    assert solve_even_model(f, d1, d2) == tuple(QQ(c) for c in cs)


def test_even_model_inconsistent():
    with pytest.raises(Inconsistent):
        solve_even_model(qp(1, 1, 0, 0, 0, 0, 1), 0, 1)  # odd part present


def test_x13_even_model_coefficients():
    got = solve_even_model(ref.x13_polynomial(), ref.D2, ref.D1)
    assert got == (ref.EVEN_C6, ref.EVEN_C4, ref.EVEN_C2, ref.EVEN_C0)


def test_polys_over_finite_field():
    F = GF(5)
    f = UniPoly([F(1), F(0), F(1)], F)  # x^2 + 1 = (x - 2)(x - 3)
    assert f(F(2)).is_zero() and f(F(3)).is_zero()
    assert UniPoly.x(F).pow_mod(5, f) == UniPoly.x(F) ** 5 % f


# -- BiPoly ---------------------------------------------------------------------------


def test_bipoly_basics():
    x, y = BiPoly.x(), BiPoly.y()
    p = (x + y) ** 2
    assert p == x ** 2 + 2 * x * y + y ** 2
    assert p - p == BiPoly()
    assert p(Fraction(1), Fraction(2)) == 9
    assert BiPoly.from_unipoly(qp(1, 0, 3)) == 3 * x ** 2 + 1
    assert BiPoly({(0, 0): Fraction(5)}) == 5


bipolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), ints, max_size=6).map(
    lambda d: BiPoly({k: Fraction(v) for k, v in d.items()})
)


@given(bipolys, bipolys, ints, ints)
def test_bipoly_evaluation_is_ring_map(p, q, u, v):
    u, v = Fraction(u), Fraction(v)
    assert (p * q)(u, v) == p(u, v) * q(u, v)
    assert (p + q)(u, v) == p(u, v) + q(u, v)
