"""Sparse univariate polynomials in z over Q(i)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .gaussian import GRat, ONE, ZERO


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but deliberately supports no arithmetic.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        if isinstance(other, int) or other is self:
            return other is not self
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int) or other is self:
            return other is self
        return NotImplemented

    def __repr__(self):
        return "MINUS_INFINITY"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()

_SCALARS = (int, Fraction, GRat)


class Poly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative exponent in polynomial")
                g = GRat.coerce(v)
                if g:
                    c[k] = g
        self._c = c
        self._hash = None

    @classmethod
    def _from_clean(cls, c: dict) -> Poly:
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def from_list(cls, coeffs: Iterable) -> Poly:
        """Build from ascending coefficients ``[c0, c1, ...]``."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def const(cls, c) -> Poly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k: int) -> Poly:
        return cls({k: c})

    @classmethod
    def parse(cls, text: str) -> Poly:
        from .text import parse_poly

        return parse_poly(text)

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self):
        return max(self._c) if self._c else MINUS_INFINITY

    @property
    def leading(self) -> GRat:
        return self._c[max(self._c)] if self._c else ZERO

    def coeff(self, k: int) -> GRat:
        return self._c.get(k, ZERO)

    def terms(self) -> list[tuple[int, GRat]]:
        """Nonzero ``(degree, coefficient)`` pairs in ascending degree."""
        return sorted(self._c.items())

    def dense(self) -> list[GRat]:
        if not self._c:
            return []
        return [self._c.get(k, ZERO) for k in range(max(self._c) + 1)]

    @property
    def constant_term(self) -> GRat:
        return self._c.get(0, ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._c)

    def is_integer(self) -> bool:
        return all(v.is_integer() for v in self._c.values())

    def height(self):
        """Largest absolute value among real and imaginary coefficient parts."""
        return max((max(abs(v.re), abs(v.im)) for v in self._c.values()), default=0)

    def strip_const(self) -> Poly:
        if 0 not in self._c:
            return self
        c = dict(self._c)
        del c[0]
        return Poly._from_clean(c)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, _SCALARS):
            return Poly.const(other)
        return None

    def __add__(self, other) -> Poly:
        o = Poly._lift(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c.get(k)
            if s is None:
                c[k] = v
            else:
                s = s + v
                if s:
                    c[k] = s
                else:
                    del c[k]
        return Poly._from_clean(c)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._from_clean({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> Poly:
        o = Poly._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        o = Poly._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> Poly:
        if isinstance(other, _SCALARS):
            g = GRat.coerce(other)
            if not g:
                return ZERO_POLY
            return Poly._from_clean({k: v * g for k, v in self._c.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._c or not other._c:
            return ZERO_POLY
        c: dict[int, GRat] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                k = i + j
                s = c.get(k)
                c[k] = a * b if s is None else s + a * b
        return Poly._from_clean({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other) -> Poly:
        if isinstance(other, _SCALARS):
            inv = GRat.coerce(other).inverse()
            return self * inv
        if isinstance(other, Poly):
            return self.exact_div(other)
        return NotImplemented

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """Euclidean division over Q(i)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, GRat] = {}
        r = dict(self._c)
        dd = other.degree
        inv_lead = other.leading.inverse()
        while r:
            top = max(r)
            if top < dd:
                break
            factor = r[top] * inv_lead
            shift = top - dd
            q[shift] = factor
            for k, v in other._c.items():
                kk = k + shift
                s = r.get(kk, ZERO) - factor * v
                if s:
                    r[kk] = s
                else:
                    r.pop(kk, None)
        return Poly._from_clean(q), Poly._from_clean(r)

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return not other.divmod(self)[1]

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for exact scalars, floating for complex/arrays."""
        if isinstance(x, _SCALARS):
            x = GRat.coerce(x)
            acc = ZERO
            for c in reversed(self.dense()):
                acc = acc * x + c
            return acc
        acc = 0 * x
        for c in reversed(self.dense()):
            acc = acc * x + complex(c)
        return acc

    def compose(self, other: Poly) -> Poly:
        acc = ZERO_POLY
        for c in reversed(self.dense()):
            acc = acc * other + c
        return acc

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, _SCALARS):
            return self._c == Poly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def sort_key(self) -> tuple:
        """Total order: by degree, then coefficients from the leading one down."""
        if not self._c:
            return (-1,)
        d = max(self._c)
        return (d,) + tuple(
            (v.re, v.im) for v in (self._c.get(k, ZERO) for k in range(d, -1, -1))
        )

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)


ZERO_POLY = Poly._from_clean({})
ONE_POLY = Poly._from_clean({0: ONE})
Z = Poly._from_clean({1: ONE})
PELL_D = Poly._from_clean({2: ONE, 0: GRat(-1)})
"""z^2 - 1, the discriminant of the functional Pell equation."""


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: Poly, c) -> GRat:
    return p(GRat.coerce(c))
