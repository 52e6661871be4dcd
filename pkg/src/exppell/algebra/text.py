"""Text format for Poly and ExpPoly.

Polynomials are written in descending degree, e.g. ``2*z^2 - 1`` or
``(1/2 + 3i)*z + 3/2*i``. Coefficients:

* real: ``3``, ``1/2`` (``1/2*z`` reads as ``(1/2)*z``);
* purely imaginary: ``i``, ``3i``, ``3/2*i``;
* otherwise parenthesised: ``(1/2 - 3i)``.

Exponential polynomials are ``p1*exp(q1) + p2*exp(q2)``; the ``exp(0)``
factor is elided, and terms are ordered by exponent (degree, then
coefficients from the leading one down). Canonical forms print
deterministically and parse back to equal values.
"""

from __future__ import annotations

from ..errors import ParseError
from ..text import ExprParser
from .exppoly import ExpPoly
from .gaussian import GRat, format_rat
from .poly import Poly


def _imag_unit(mag) -> str:
    if mag == 1:
        return "i"
    if isinstance(mag, int):
        return f"{mag}i"
    return f"{format_rat(mag)}*i"


def _signed_parts(c: GRat) -> tuple[bool, str]:
    """(negative?, body) for a coefficient standing alone."""
    re, im = c.re, c.im
    if im == 0:
        return re < 0, format_rat(abs(re))
    if re == 0:
        return im < 0, _imag_unit(abs(im))
    sign = "-" if im < 0 else "+"
    return False, f"({format_rat(re)} {sign} {_imag_unit(abs(im))})"


def format_coefficient(c: GRat) -> str:
    neg, body = _signed_parts(c)
    return f"-{body}" if neg else body


def _monomial(k: int) -> str:
    return "" if k == 0 else ("z" if k == 1 else f"z^{k}")


def _poly_terms(p: Poly) -> list[tuple[bool, str]]:
    out = []
    for k, c in sorted(p.terms(), reverse=True):
        neg, body = _signed_parts(c)
        mono = _monomial(k)
        if mono:
            body = mono if body == "1" else f"{body}*{mono}"
        out.append((neg, body))
    return out


def _join(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    neg, body = parts[0]
    s = f"-{body}" if neg else body
    for neg, body in parts[1:]:
        s += f" - {body}" if neg else f" + {body}"
    return s


def format_poly(p: Poly) -> str:
    return _join(_poly_terms(p))


def format_exppoly(e: ExpPoly) -> str:
    parts: list[tuple[bool, str]] = []
    for coeff, expo in e.terms():
        if not expo:
            parts.extend(_poly_terms(coeff))
            continue
        factor = f"exp({format_poly(expo)})"
        cterms = _poly_terms(coeff)
        if len(cterms) == 1:
            neg, body = cterms[0]
            parts.append((neg, factor if body == "1" else f"{body}*{factor}"))
        else:
            parts.append((False, f"({format_poly(coeff)})*{factor}"))
    return _join(parts)


class _AlgebraParser(ExprParser):
    imaginary_suffix = True

    def number(self, n, pos):
        return ExpPoly.from_poly(Poly.const(n))

    def name(self, name, pos):
        if name == "z":
            return ExpPoly.from_poly(Poly({1: 1}))
        if name == "i":
            return ExpPoly.from_poly(Poly.const(GRat(0, 1)))
        raise ParseError(f"unknown name {name!r}", pos, self.text)

    def call(self, name, arg, pos):
        if name != "exp":
            raise ParseError(f"unknown function {name!r}", pos, self.text)
        if not arg.is_poly():
            raise ParseError("exp() argument must be a polynomial", pos, self.text)
        return ExpPoly.exp(arg.as_poly())

    def divide(self, a, b, pos):
        if not b.is_poly() or not b.as_poly().is_constant() or not b:
            raise ParseError("can only divide by a nonzero constant", pos, self.text)
        inv = b.as_poly().constant_term.inverse()
        return a * ExpPoly.from_poly(Poly.const(inv))


def parse_exppoly(text: str) -> ExpPoly:
    return _AlgebraParser(text).parse()


def parse_poly(text: str) -> Poly:
    e = parse_exppoly(text)
    if not e.is_poly():
        raise ParseError("expected a polynomial, found exp()", 0, text)
    return e.as_poly()
