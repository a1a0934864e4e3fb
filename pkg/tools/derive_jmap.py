"""Derive the j-line map on the X0(37) working model y^2 - x^3 y = g(x)
from q-expansions, and write it in the package's j-map data format.

Method:
  * fa, fb: the weight-2 newforms of level 37 (isogeny classes of
    y^2 + y = x^3 - x and y^2 + y = x^3 + x^2 - 3x + 1), with a_p from
    point counts and a_n from multiplicativity and the Hecke recursion.
  * x0 = fa/fb is odd under w37 (fa has eigenvalue +1, fb has -1), so the even
    model coordinate is X = lam * x0 or lam / x0.  y0 = q dx0/dq / fb satisfies
    y0^2 = S(x0) with S an even sextic; lam and the Y-scaling are fixed by
    matching S with the even model (-1/64)(X^6 + 9X^4 + 11X^2 - 37).
  * Working-model coordinates: x = 2/(1 - X), y = x^3 (Y + 1/2).
  * j = E4^3 / Delta.  Solve R(x) j = P(x) + Q(x) y by exact linear algebra.

Usage: python3 tools/derive_jmap.py OUT_PATH [--terms N]
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from sympy import QQ as SQQ
from sympy.polys.matrices import DomainMatrix

# -- truncated power series in q (lists of Fractions, index = exponent) ---------


def mul(a, b, n):
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[: n - i]):
                out[i + j] += ai * bj
    return out


def inv(a, n):
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term")
    out = [Fraction(0)] * n
    out[0] = Fraction(1) / a[0]
    for k in range(1, n):
        acc = sum(a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        out[k] = -acc / a[0]
    return out


# -- newforms --------------------------------------------------------------------


def count_affine(ainvs, p):
    a1, a2, a3, a4, a6 = ainvs
    n = 0
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
                n += 1
    return n


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def newform(ainvs, N, level=37):
    """Coefficients [0, a1, a2, ...] up to index N - 1."""
    from sympy import factorint

    ap = {p: p - count_affine(ainvs, p) for p in primes_upto(N)}
    a = [0] * N
    if N > 1:
        a[1] = 1
    for n in range(2, N):
        fac = factorint(n)
        val = 1
        for p, e in fac.items():
            # a_{p^e}
            prev, cur = 1, ap[p]
            for _ in range(e - 1):
                if p == level:
                    prev, cur = cur, cur * ap[p]
                else:
                    prev, cur = cur, ap[p] * cur - p * prev
            val *= cur
        a[n] = val
    return a


def j_series(N):
    """Coefficients of q * j(q), so index 0 is the q^-1 term."""
    from sympy import divisor_sigma

    E4 = [1] + [240 * int(divisor_sigma(n, 3)) for n in range(1, N)]
    # Delta / q = prod (1 - q^n)^24
    P = [1] + [0] * (N - 1)
    for n in range(1, N):
        for _ in range(24):
            for i in range(N - 1, n - 1, -1):
                P[i] -= P[i - n]
    E4c = mul(mul(E4, E4, N), E4, N)
    return [Fraction(c) for c in mul(E4c, [int(v) for v in inv([Fraction(v) for v in P], N)], N)]


# -- linear algebra --------------------------------------------------------------


def nullspace(rows, ncols):
    M = DomainMatrix([[SQQ(r[j].numerator, r[j].denominator) for j in range(ncols)] for r in rows], (len(rows), ncols), SQQ)
    ns = M.nullspace()
    return [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in ns.to_Matrix().tolist()] if ns.shape[0] else []


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--terms", type=int, default=260)
    ap.add_argument("--deg", type=int, default=None, help="degree bound for P, Q, R")
    args = ap.parse_args(argv)
    N = args.terms

    fa = newform((0, 0, 1, -1, 0), N + 2)
    fb = newform((0, 1, 1, -23, -50), N + 2)
    # divide by q
    fa1 = [Fraction(c) for c in fa[1:]]
    fb1 = [Fraction(c) for c in fb[1:]]
    x0 = mul(fa1, inv(fb1, N), N)
    # q d/dq of x0 (x0 has no pole)
    qdx0 = [k * c for k, c in enumerate(x0)]
    # y0 = q dx0/dq / fb; q dx0/dq has no constant term and fb = q fb1
    assert qdx0[0] == 0
    y0 = mul(qdx0[1:] + [0], inv(fb1, N), N - 1)
    n = N - 1
    x0 = x0[:n]

    # y0^2 = sum s_i x0^i
    pw = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    for i in range(6):
        pw.append(mul(pw[-1], x0, n))
    y2 = mul(y0, y0, n)
    rows = [[pw[i][t] for i in range(7)] + [-y2[t]] for t in range(n)]
    ns = nullspace(rows, 8)
    assert len(ns) == 1, "no unique sextic relation"
    v = ns[0]
    s = [c / v[7] for c in v[:7]]
    print("sextic in x0:", s, file=sys.stderr)
    assert s[1] == s[3] == s[5] == 0

    # Match X = lam x0 (or lam / x0) with Y = mu y0 (or mu y0 / x0^3) against
    # Y^2 = (-1/64)(X^6 + 9X^4 + 11X^2 - 37).
    # Direct: mu^2 s_i = e_i lam^i  -> ratios s4/s6 = (e4/e6) / lam^2.
    e = {6: Fraction(-1, 64), 4: Fraction(-9, 64), 2: Fraction(-11, 64), 0: Fraction(37, 64)}
    from sympy import Rational, sqrt

    choice = None
    for inverted in (False, True):
        ss = {i: s[i] for i in (0, 2, 4, 6)}
        if inverted:
            # X = lam / x0, Y = mu y0 / x0^3:  mu^2 s_{6-i} = e_i lam^i
            ss = {i: s[6 - i] for i in (0, 2, 4, 6)}
        lam2 = (e[4] / e[6]) / (ss[4] / ss[6])
        mu2 = e[0] / ss[0]
        ok = all(mu2 * ss[i] == e[i] * lam2 ** (i // 2) for i in (0, 2, 4, 6))
        if ok:
            lam = sqrt(Rational(lam2.numerator, lam2.denominator))
            mu = sqrt(Rational(mu2.numerator, mu2.denominator))
            if lam.is_rational and mu.is_rational:
                choice = (inverted, Fraction(int(lam.p), int(lam.q)), Fraction(int(mu.p), int(mu.q)))
                break
    assert choice is not None, "could not match the even model"
    inverted, lam, mu = choice
    print("matching:", choice, file=sys.stderr)

    # sign choices (lam -> -lam is w37-twisted, mu -> -mu the hyperelliptic involution)
    # are ambiguous; all four are tried and the one validating against the
    # tabulated curves is kept.
    jq = j_series(n)  # q j(q)
    results = []
    for sl in (1, -1):
        for sm in (1, -1):
            L, Mu = sl * lam, sm * mu
            if inverted:
                X = [L * c for c in inv(x0, n)]
                Y = [Mu * c for c in mul(y0, inv(mul(mul(x0, x0, n), x0, n), n), n)]
            else:
                X = [L * c for c in x0]
                Y = [Mu * c for c in y0]
            one_minus = [-c for c in X]
            one_minus[0] += 1
            # x = 2/(1 - X) may have a simple pole at q = 0: x = q^-e * xt
            e = 0
            while one_minus[0] == 0:
                one_minus = one_minus[1:] + [0]
                e += 1
            m = n - e
            xt = [2 * c for c in inv(one_minus[:m], m)]
            x3 = mul(mul(xt, xt, m), xt, m)
            Yh = list(Y[:m])
            Yh[0] += Fraction(1, 2)
            yt = mul(x3, Yh, m)  # y = q^(-3e) * yt
            res = fit_j(xt, yt, e, jq[:m], m, args.deg)
            if res is not None:
                results.append(((sl, sm), res))
    return write_best(results, args.out)


def shift(c, k, n):
    """Multiply a power series by q^k (k >= 0), truncated to n terms."""
    return ([Fraction(0)] * k + list(c))[:n]


def fit_j(xt, yt, e, jq, n, deg=None, dmax=40):
    """Find P, Q, R with R(x) j = P(x) + Q(x) y, as a q-series identity.

    x = q^-e xt, y = q^-3e yt and j = q^-1 jq.  The identity is multiplied
    by q^(e d + 3e + 1) so every term is a power series.
    """
    top = deg or dmax
    xp = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
    for _ in range(top):
        xp.append(mul(xp[-1], xt, n))
    xpy = [mul(p, yt, n) for p in xp]
    Rj = [mul(p, jq, n) for p in xp]
    for d in [deg] if deg else range(4, dmax + 1):
        ncols = 3 * (d + 1)
        if n < ncols + 20:
            break
        S = e * d + 3 * e + 1
        cols = [shift(Rj[i], S - e * i - 1, n) for i in range(d + 1)]
        cols += [[-c for c in shift(xp[i], S - e * i, n)] for i in range(d + 1)]
        cols += [[-c for c in shift(xpy[i], S - e * i - 3 * e, n)] for i in range(d + 1)]
        rows = [[col[t] for col in cols] for t in range(n)]
        ns = nullspace(rows, ncols)
        print(f"degree {d}: nullity {len(ns)}", file=sys.stderr)
        if ns:
            v = ns[0]
            R, P, Q = v[: d + 1], v[d + 1 : 2 * d + 2], v[2 * d + 2 :]
            return d, P, Q, R, len(ns)
    return None


def render(P, Q, R, provenance):
    from math import lcm

    coeffs = [c for c in P + Q + R if c != 0]
    den = lcm(*(c.denominator for c in coeffs))
    lines = [f"provenance: {provenance}", "# j = numerator / denominator on y^2 - x^3 y = g(x)", "[numerator]"]
    for i, c in enumerate(P):
        if c:
            lines.append(f"{i} 0 {c * den}")
    for i, c in enumerate(Q):
        if c:
            lines.append(f"{i} 1 {c * den}")
    lines.append("[denominator]")
    for i, c in enumerate(R):
        if c:
            lines.append(f"{i} 0 {c * den}")
    return "\n".join(lines) + "\n"


def row_agreement(text):
    """Per-row status against the tabulated curves: '=' exact, 'c' conjugate, 'x' neither."""
    from modcurve_check import reference_data as ref
    from modcurve_check.pipelines.jmap import parse_jmap, row_expected_j, row_point

    jm = parse_jmap(text)
    out = []
    for row in ref.TABLE1:
        _, x, y = row_point(row)
        got, want = jm.evaluate(x, y), row_expected_j(row)
        out.append("=" if got == want else ("c" if got == want.conjugate() else "x"))
    return "".join(out)


def write_best(results, out):
    prov = (
        "derived from q-expansions of the level-37 newforms (j = E4^3/Delta, "
        "X = fa/fb scaled to the even model, exact linear solve); tools/derive_jmap.py"
    )
    best = None
    for signs, (d, P, Q, R, nullity) in results:
        text = render(P, Q, R, prov)
        status = row_agreement(text)
        print(f"signs {signs}, degree {d}, nullity {nullity}: rows {status}", file=sys.stderr)
        if best is None or status.count("=") > best[0].count("="):
            best = (status, text)
    if best is None:
        print("no candidate map found", file=sys.stderr)
        return 1
    with open(out, "w") as fh:
        fh.write(best[1])
    print(f"wrote {out} (rows {best[0]})", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
