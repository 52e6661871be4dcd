"""Exact arithmetic: Q(i), Q(i)[z], exponential polynomials, and R[w] with w^2 = z^2 - 1."""

from .exppoly import ExpPoly, exp_arith, exp_is_zero, exp_normalize
from .ext import ExtElem, ext_arith, ext_conj, ext_norm
from .gaussian import GRat
from .poly import MINUS_INFINITY, PELL_D, Z, Poly, poly_arith, poly_eval
from .text import format_exppoly, format_poly, parse_exppoly, parse_poly

__all__ = [
    "GRat",
    "Poly",
    "ExpPoly",
    "ExtElem",
    "Z",
    "PELL_D",
    "MINUS_INFINITY",
    "poly_arith",
    "poly_eval",
    "exp_normalize",
    "exp_arith",
    "exp_is_zero",
    "ext_arith",
    "ext_conj",
    "ext_norm",
    "parse_poly",
    "parse_exppoly",
    "format_poly",
    "format_exppoly",
]
