"""The quadratic extension R[w] with w^2 = z^2 - 1."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exppoly import ExpPoly
from .gaussian import GRat
from .poly import PELL_D, Poly

_D = ExpPoly.from_poly(PELL_D)


def _coerce(x) -> ExpPoly:
    if isinstance(x, ExpPoly):
        return x
    if isinstance(x, str):
        return ExpPoly.parse(x)
    return ExpPoly.from_poly(x)


class ExtElem:
    """f + g*w with f, g exponential polynomials."""

    __slots__ = ("f", "g")

    def __init__(self, f=0, g=0):
        object.__setattr__(self, "f", _coerce(f))
        object.__setattr__(self, "g", _coerce(g))

    def __setattr__(self, name, value):
        raise AttributeError("ExtElem is immutable")

    @classmethod
    def w(cls) -> ExtElem:
        return cls(0, 1)

    @classmethod
    def fundamental_unit(cls) -> ExtElem:
        """z + w."""
        return cls(Poly({1: 1}), 1)

    def _lift(self, other) -> ExtElem | None:
        if isinstance(other, ExtElem):
            return other
        if isinstance(other, (ExpPoly, Poly, int, Fraction, GRat)):
            return ExtElem(other, 0)
        return None

    def __add__(self, other) -> ExtElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.f + o.f, self.g + o.g)

    __radd__ = __add__

    def __neg__(self) -> ExtElem:
        return ExtElem(-self.f, -self.g)

    def __sub__(self, other) -> ExtElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.f - o.f, self.g - o.g)

    def __rsub__(self, other) -> ExtElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> ExtElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f1, g1, f2, g2 = self.f, self.g, o.f, o.g
        return ExtElem(f1 * f2 + _D * g1 * g2, f1 * g2 + f2 * g1)

    __rmul__ = __mul__

    def conj(self) -> ExtElem:
        return ExtElem(self.f, -self.g)

    def norm(self) -> ExpPoly:
        return self.f * self.f - _D * self.g * self.g

    def inverse(self) -> ExtElem:
        """conj(a) / Nr(a); defined when the norm is a unit c*exp(q) of the base ring."""
        try:
            inv_norm = self.norm().unit_inverse()
        except ValueError:
            raise ValueError(f"{self} is not invertible: its norm is not a unit") from None
        return self.conj() * inv_norm

    def __pow__(self, n: int) -> ExtElem:
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ExtElem(1, 0)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, z, w):
        """Numeric value at surface points (z, w)."""
        return self.f(z) + self.g(z) * np.asarray(w, dtype=complex)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.f == o.f and self.g == o.g

    def __hash__(self) -> int:
        return hash((self.f, self.g))

    def __repr__(self) -> str:
        return f"ExtElem({str(self.f)!r}, {str(self.g)!r})"

    def __str__(self) -> str:
        return f"({self.f}) + ({self.g})*w"


def ext_arith(a: ExtElem, b: ExtElem, op: str) -> ExtElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def ext_conj(a: ExtElem) -> ExtElem:
    return a.conj()


def ext_norm(a: ExtElem) -> ExpPoly:
    return a.norm()
