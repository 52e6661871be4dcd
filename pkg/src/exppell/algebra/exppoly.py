"""Canonical exponential polynomials  sum_j p_j(z) * exp(q_j(z)).

Exponents must have zero constant term. Over Q(i) this makes the canonical
form faithful: distinct exponents without constant terms give exponentials
that are linearly independent over C[z], so an ExpPoly is zero exactly when
it has no terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

from ..errors import NonzeroConstantExponent
from .gaussian import GRat
from .poly import ONE_POLY, ZERO_POLY, Poly


class ExpPoly:
    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Iterable[tuple[object, object]] = ()):
        acc: dict[Poly, Poly] = {}
        for coeff, expo in terms:
            coeff = _as_poly(coeff)
            expo = _as_poly(expo)
            if expo.constant_term:
                raise NonzeroConstantExponent(
                    f"exponent {expo} has nonzero constant term {expo.constant_term}"
                )
            prev = acc.get(expo)
            acc[expo] = coeff if prev is None else prev + coeff
        self._t = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, t: dict) -> ExpPoly:
        e = cls.__new__(cls)
        e._t = t
        e._hash = None
        return e

    @classmethod
    def from_poly(cls, p) -> ExpPoly:
        p = _as_poly(p)
        return cls._from_clean({ZERO_POLY: p} if p else {})

    @classmethod
    def exp(cls, q, coeff=1) -> ExpPoly:
        return cls([(coeff, q)])

    @classmethod
    def parse(cls, text: str) -> ExpPoly:
        from .text import parse_exppoly

        return parse_exppoly(text)

    def terms(self) -> list[tuple[Poly, Poly]]:
        """``(coeff, exponent)`` pairs, ordered by exponent."""
        return [(self._t[e], e) for e in sorted(self._t, key=Poly.sort_key)]

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_poly(self) -> bool:
        return all(not e for e in self._t)

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self._t.get(ZERO_POLY, ZERO_POLY)

    def exponents(self) -> list[Poly]:
        return sorted(self._t, key=Poly.sort_key)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> ExpPoly:
        o = _lift(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for e, c in o._t.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return ExpPoly._from_clean(t)

    __radd__ = __add__

    def __neg__(self) -> ExpPoly:
        return ExpPoly._from_clean({e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> ExpPoly:
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> ExpPoly:
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> ExpPoly:
        o = _lift(other)
        if o is None:
            return NotImplemented
        t: dict[Poly, Poly] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in o._t.items():
                e = e1 + e2
                c = c1 * c2
                s = t.get(e)
                t[e] = c if s is None else s + c
        return ExpPoly._from_clean({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ExpPoly:
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def unit_inverse(self) -> ExpPoly:
        """Inverse of a unit c*exp(q) with c a nonzero constant."""
        if len(self._t) != 1:
            raise ValueError(f"{self} is not a unit")
        (e, c), = self._t.items()
        if not c.is_constant():
            raise ValueError(f"{self} is not a unit")
        return ExpPoly._from_clean({-e: Poly.const(c.constant_term.inverse())})

    # -- evaluation ---------------------------------------------------------

    def __call__(self, z):
        """Numeric value at a complex point or numpy array of points."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for e, c in self._t.items():
            acc = acc + c(z) * np.exp(e(z))
        return acc

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"ExpPoly({str(self)!r})"

    def __str__(self) -> str:
        from .text import format_exppoly

        return format_exppoly(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction, GRat)):
        return Poly.const(x)
    raise TypeError(f"expected a polynomial, got {type(x).__name__}")


def _lift(x) -> ExpPoly | None:
    if isinstance(x, ExpPoly):
        return x
    if isinstance(x, (Poly, int, Fraction, GRat)):
        return ExpPoly.from_poly(x)
    return None


ZERO = ExpPoly._from_clean({})
ONE = ExpPoly._from_clean({ZERO_POLY: ONE_POLY})


def exp_normalize(raw: Iterable[tuple[object, object]]) -> ExpPoly:
    return ExpPoly(raw)


def exp_arith(a: ExpPoly, b: ExpPoly, op: str) -> ExpPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def exp_is_zero(a: ExpPoly) -> bool:
    return a.is_zero()
