"""Quadratic extensions B(sqrt(s)) of Q or K."""

from __future__ import annotations

from fractions import Fraction

from .rational import QQ, squarefree_decomposition


class QuadraticExtension:
    """B(sqrt(s)) for a nonsquare s in the base field B.

    Over Q the radicand is normalised to a squarefree integer D; the original
    radicand s equals D * scale^2 and ``sqrt_radicand`` returns sqrt(s) as an
    element of the extension.
    """

    def __init__(self, base, radicand):
        radicand = base(radicand)
        if base.sqrt(radicand) is not None:
            raise ValueError(f"{radicand} is a square in {base}; use the base field")
        self.base = base
        self.characteristic = getattr(base, "characteristic", 0)
        if base is QQ:
            D, m = squarefree_decomposition(radicand)
            self.radicand = Fraction(D)
            self._scale = m
        else:
            self.radicand = radicand
            self._scale = base.one
        self.zero = QuadExtElement(self, base.zero, base.zero)
        self.one = QuadExtElement(self, base.one, base.zero)
        self.root = QuadExtElement(self, base.zero, base.one)

    def __repr__(self):
        return f"{self.base}(sqrt({self.radicand}))"

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticExtension)
            and self.base == other.base
            and self.radicand == other.radicand
        )

    def __hash__(self):
        return hash(("quad", self.base, self.radicand))

    def __call__(self, value) -> "QuadExtElement":
        if isinstance(value, QuadExtElement):
            if value.field == self:
                return value
            raise TypeError("element of a different quadratic extension")
        return QuadExtElement(self, self.base(value), self.base.zero)

    def element(self, u, v) -> "QuadExtElement":
        return QuadExtElement(self, self.base(u), self.base(v))

    def sqrt_radicand(self) -> "QuadExtElement":
        """sqrt of the radicand originally passed to the constructor."""
        return QuadExtElement(self, self.base.zero, self.base(self._scale))

    def sqrt(self, x):
        raise NotImplementedError("square roots in quadratic extensions are not needed")


class QuadExtElement:
    __slots__ = ("field", "u", "v")

    def __init__(self, field: QuadraticExtension, u, v):
        self.field = field
        self.u = u
        self.v = v

    def _coerce(self, other):
        if isinstance(other, QuadExtElement):
            return other
        try:
            return QuadExtElement(self.field, self.field.base(other), self.field.base.zero)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def in_base(self) -> bool:
        return self.v == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v))

    def __repr__(self):
        return f"({self.u}) + ({self.v})*sqrt({self.field.radicand})"

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElement(self.field, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(self.field, -self.u, -self.v)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElement(self.field, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = self.field.radicand
        return QuadExtElement(
            self.field,
            self.u * o.u + self.v * o.v * s,
            self.u * o.v + self.v * o.u,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> "QuadExtElement":
        return QuadExtElement(self.field, self.u, -self.v)

    def norm(self):
        return self.u * self.u - self.v * self.v * self.field.radicand

    def trace(self):
        return self.u + self.u

    def inverse(self) -> "QuadExtElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExtElement(self.field, self.u / n, -self.v / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()
