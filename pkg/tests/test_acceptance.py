"""The fifteen acceptance criteria, one test each.

Each test records a PASS/FAIL line that is repeated in the terminal summary.
"""

import random
import time
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import record_criterion
from oracles import DivisorOracle, brute_torsion_x

from modcurve_check import reference_data as ref
from modcurve_check.arith import GF, K, factor_mod_p
from modcurve_check.ellcurve import WeierstrassCurve, division_polynomial, lift_x, point_order
from modcurve_check.genus2 import count_deg_lt2, identity, jac_add, jac_mul, jacobian_order
from modcurve_check.pipelines import x13, x37
from modcurve_check.pipelines.common import SuiteConfig
from modcurve_check.pipelines.table import generate_table


def _run(number, title, fn, limit=None):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:
        record_criterion(number, title, False, f"{type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s, limit {limit}s"
    record_criterion(number, title, ok, f"{detail}; {elapsed:.2f}s")
    assert ok, detail


def _check(fn, *args):
    expected, actual, ok = fn(*args)
    return ok, actual if ok else f"expected {expected}, got {actual}"


def test_c01_cusps_on_curve():
    ctx = x13.X13Context(SuiteConfig())
    ctx.curve
    _run(1, "12 cusps lie on the X1(13) model", lambda: _check(x13.check_cusps, ctx), limit=1)


def test_c02_x13_even_model(x13_ctx):
    def body():
        ok1, d1 = _check(x13.check_d_pair, x13_ctx)
        ok2, d2 = _check(x13.check_even_model, x13_ctx)
        return ok1 and ok2, f"d-pair {ok1}, c-coefficients {ok2}"

    _run(2, "X1(13) even model: d-pair and c0..c6", body)


def test_c03_x37_even_model():
    _run(3, "X0(37) even model (-1/64)(1, 9, 11, -37)", lambda: _check(x37.check_even_model, SuiteConfig()))


def test_c04_eprime_structure(x13_ctx):
    def body():
        E, _ = x13_ctx.eprime
        psi = division_polynomial(E, 19)
        pts = lift_x(E, ref.ORDER19_X)
        order = point_order(E, pts[0], 100) if pts else None
        emd = x13_ctx.even_model
        c_ok = E.a4 == emd.c2 * emd.c6 and E.a6 == emd.c0 * emd.c6 ** 2
        printed = (E.a2, E.a4, E.a6) == (ref.EPRIME_B, ref.EPRIME_C, ref.EPRIME_D)
        ok = psi(ref.ORDER19_X) == 0 and bool(pts) and order == 19 and c_ok and printed
        return ok, f"psi19(x_P)=0: {psi(ref.ORDER19_X) == 0}, lifts: {len(pts)}, order {order}, c=c2c6,d=c0c6^2: {c_ok}, printed: {printed}"

    _run(4, "E' structure and order-19 point", body, limit=60)


def test_c05_prime_splitting():
    def body():
        got = {p: sorted(h.degree for h, _ in factor_mod_p(K.minpoly, p)) for p in (3, 5)}
        return got == {3: [3, 3], 5: [2, 2, 2]}, f"degrees {got}"

    _run(5, "minimal polynomial splits as 3+3 mod 3 and 2+2+2 mod 5", body)


def test_c06_jacobian_orders():
    def body():
        from modcurve_check.genus2 import HyperCurve
        from modcurve_check.poly import UniPoly

        n3 = jacobian_order(HyperCurve(UniPoly(ref.X13_F, GF(3))), 3)
        n5 = jacobian_order(HyperCurve(UniPoly(ref.X13_F, GF(5))), 2)
        return (n3, n5) == (1444, 361), f"|J(F_27)| = {n3}, |J(F_25)| = {n5}"

    _run(6, "Jacobian orders 1444 over F_27 and 361 over F_25", body, limit=10)


def test_c07_cuspidal_subgroup():
    ctx = x13.X13Context(SuiteConfig())

    def body():
        H = ctx.cusp_subgroup
        C = ctx.curve
        zero = identity(C)
        bad = [D for D in H if D != zero and jac_mul(C, 19, D) != zero]
        n_lt2 = count_deg_lt2(H)
        ok_lt2, _ = _check(x13.check_deg_lt2, ctx)
        ok = len(H) == 361 and not bad and n_lt2 == 23 and ok_lt2
        return ok, f"{len(H)} classes, {len(bad)} of order != 19, deg<2 count {n_lt2}"

    _run(7, "cuspidal subgroup has 361 elements of exponent 19, 23 of degree < 2", body, limit=60)


def test_c08_reduction_injective(x13_ctx):
    def body():
        ok5, d5 = _check(x13._reduction_check, x13_ctx, 5)
        ok3, d3 = _check(x13._reduction_check, x13_ctx, 3)
        return ok5 and ok3, f"above 5: {d5}; above 3: {d3}"

    _run(8, "cuspidal subgroup reduces injectively above 3 and 5", body)


def test_c09_pullback_census(x13_ctx):
    _run(9, "pullback of E'(K) gives 38 points, 12 cusps, 26 quadratic", lambda: _check(x13.check_pullback, x13_ctx))


def test_c10_discriminant_support(x13_ctx):
    _run(10, "discriminant supported on {2, 13}", lambda: _check(x13.check_discriminant, x13_ctx))


def test_c11_x37_map_identity():
    def body():
        cfg = SuiteConfig()
        ok1, d1 = _check(x37.check_map_identity, cfg)
        ok2, d2 = _check(x37.check_working_model, cfg)
        return ok1 and ok2, f"map identity {ok1}, f37 = g + x^6/4 {ok2}"

    _run(11, "X0(37) quotient map identity", body)


def test_c12_non_torsion():
    _run(12, "nG != O on E37 for n <= 12", lambda: _check(x37.check_non_torsion, SuiteConfig()))


def test_c13_table_points():
    _run(13, "quadratic points for k <= 15 reproduce the table", lambda: _check(x37.check_table_points, SuiteConfig()), limit=5)


@pytest.mark.xfail(
    strict=True,
    reason="printed row D = 4521 has B exactly 10x too large relative to j(P) and its own A; "
    "the other 12 rows agree exactly (see README)",
)
def test_c14_table_curves(bundled_jmap):
    _run(14, "j(P) matches the tabulated curves", lambda: _check(x37.check_table_curves, SuiteConfig(jmap=bundled_jmap)))


def test_c14_skips_without_jmap():
    assert x37.check_table_curves(SuiteConfig()) is None


# -- criterion 15 ---------------------------------------------------------------

_ORACLE = None


def _oracle():
    global _ORACLE
    if _ORACLE is None:
        _ORACLE = DivisorOracle(ref.X13_F, 3)
    return _ORACLE


def test_c15a_jac_add_matches_divisor_oracle():
    def body():
        O = _oracle()
        C = O.curve
        reps = [E for E in O.divisors if not O.is_canonical(E)] + [next(E for E in O.divisors if O.is_canonical(E))]
        bad = 0
        for E1 in reps:
            for E2 in reps:
                want = O.to_mumford(O.add(E1, E2))
                if jac_add(C, O.to_mumford(E1), O.to_mumford(E2)) != want:
                    bad += 1
        order_ok = O.group_order() == jacobian_order(C, 1) == len(reps)
        return bad == 0 and order_ok, f"{len(reps) ** 2} class pairs, {bad} disagreements, |J(F_3)| = {len(reps)}"

    _run(15, "jac_add agrees with the divisor-class oracle on all pairs over F_3", body)


_TORSION_FAILURES = []


@settings(max_examples=30)
@given(
    p=st.sampled_from([5, 7, 11, 13, 17, 19, 23]),
    n=st.sampled_from([3, 5, 7]),
    coeffs=st.tuples(st.integers(0, 100), st.integers(0, 100), st.integers(0, 100)),
)
def _torsion_property(p, n, coeffs):
    F = GF(p)
    a2, a4, a6 = (F(c) for c in coeffs)
    try:
        C = WeierstrassCurve.short(a2, a4, a6, F)
    except ValueError:
        assume(False)
    psi = division_polynomial(C, n)
    roots = {x for x in F.elements() if psi(x).is_zero()}
    want = brute_torsion_x(C, n)
    if roots != want:
        _TORSION_FAILURES.append((p, n, coeffs))
    assert roots == want


def test_c15b_division_polynomial_matches_brute_torsion():
    def body():
        _torsion_property()
        return not _TORSION_FAILURES, "random curves over F_p, p <= 23, n in {3, 5, 7}"

    _run(15, "division-polynomial roots agree with brute-force n-torsion", body)
