"""Exact Gaussian rationals, the coefficient field Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Rat = Union[int, Fraction]


def _rat(x) -> Rat:
    # ints stay ints so that integer-heavy arithmetic avoids Fraction overhead
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return _rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def format_rat(q: Rat) -> str:
    if isinstance(q, int):
        return str(q)
    return f"{q.numerator}/{q.denominator}"


class GRat(tuple):
    """re + im*i with exact rational parts; immutable and hashable."""

    __slots__ = ()

    def __new__(cls, re=0, im=0):
        return tuple.__new__(cls, (_rat(re), _rat(im)))

    @classmethod
    def _raw(cls, re: Rat, im: Rat) -> GRat:
        return tuple.__new__(cls, (re, im))

    @classmethod
    def coerce(cls, x) -> GRat:
        if isinstance(x, GRat):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x)

    @property
    def re(self) -> Rat:
        return self[0]

    @property
    def im(self) -> Rat:
        return self[1]

    def is_zero(self) -> bool:
        return self[0] == 0 and self[1] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self[1] == 0

    def is_integer(self) -> bool:
        return self[1] == 0 and isinstance(self[0], int)

    def __add__(self, other) -> GRat:
        if not isinstance(other, GRat):
            try:
                other = GRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GRat._raw(_rat(self[0] + other[0]), _rat(self[1] + other[1]))

    __radd__ = __add__

    def __neg__(self) -> GRat:
        return GRat._raw(-self[0], -self[1])

    def __sub__(self, other) -> GRat:
        if not isinstance(other, GRat):
            try:
                other = GRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GRat._raw(_rat(self[0] - other[0]), _rat(self[1] - other[1]))

    def __rsub__(self, other) -> GRat:
        return -(self - other)

    def __mul__(self, other) -> GRat:
        if not isinstance(other, GRat):
            try:
                other = GRat.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self
        c, d = other
        if b == 0 and d == 0:
            return GRat._raw(_rat(a * c), 0)
        return GRat._raw(_rat(a * c - b * d), _rat(a * d + b * c))

    __rmul__ = __mul__

    def conjugate(self) -> GRat:
        return GRat._raw(self[0], -self[1])

    def abs2(self) -> Rat:
        return _rat(self[0] * self[0] + self[1] * self[1])

    def inverse(self) -> GRat:
        n = self.abs2()
        if n == 0:
            raise ZeroDivisionError("GRat division by zero")
        return GRat(Fraction(self[0]) / n, Fraction(-self[1]) / n)

    def __truediv__(self, other) -> GRat:
        if not isinstance(other, GRat):
            try:
                other = GRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GRat:
        return GRat.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> GRat:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GRat):
            return tuple.__eq__(self, other)
        if isinstance(other, (int, Fraction)):
            return self[1] == 0 and self[0] == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self[1] == 0:
            return hash(self[0])
        return hash((self[0], self[1]))

    def __complex__(self) -> complex:
        return complex(float(self[0]), float(self[1]))

    def __repr__(self) -> str:
        return f"GRat({format_rat(self[0])}, {format_rat(self[1])})"

    def __str__(self) -> str:
        from .text import format_coefficient

        return format_coefficient(self)


ZERO = GRat._raw(0, 0)
ONE = GRat._raw(1, 0)
I = GRat._raw(0, 1)
