"""The rational field, backed by :class:`fractions.Fraction`."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import sympy


class RationalField:
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def sqrt(self, x):
        x = Fraction(x)
        if x < 0:
            return None
        n, d = isqrt(x.numerator), isqrt(x.denominator)
        if n * n == x.numerator and d * d == x.denominator:
            return Fraction(n, d)
        return None

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None

    def order_key(self, x):
        return Fraction(x)


QQ = RationalField()


def squarefree_decomposition(x) -> tuple[int, Fraction]:
    """Write a nonzero rational x as D * m^2 with D a squarefree integer.

    Returns (D, m) with m > 0 rational.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no squarefree part")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    D, m = sign, 1
    for prime, e in sympy.factorint(abs(n)).items():
        if e % 2:
            D *= prime
        m *= prime ** (e // 2)
    # x = n / den^2 = D m^2 / den^2
    return D, Fraction(m, x.denominator)


def squarefree_part(x) -> int:
    return squarefree_decomposition(x)[0]
