import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exppell.algebra import (
    PELL_D,
    ExpPoly,
    ExtElem,
    GRat,
    Poly,
    Z,
    exp_arith,
    ext_arith,
    ext_conj,
    ext_norm,
    format_exppoly,
    parse_exppoly,
    parse_poly,
    poly_arith,
)
from exppell.errors import NonzeroConstantExponent, ParseError

from strategies import exppolys, ext_elems, gaussians, polys


# -- Gaussian rationals -------------------------------------------------------


def test_grat_basics():
    a = GRat(1, 2)
    assert a * a.conjugate() == 5
    assert a.inverse() * a == 1
    assert GRat(Fraction(4, 2), 0).re == 2 and isinstance(GRat(Fraction(4, 2), 0).re, int)
    assert hash(GRat(3)) == hash(3)
    assert GRat(0, 1) ** 2 == -1


@given(gaussians, gaussians, gaussians)
def test_grat_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if not a.is_zero():
        assert a * a.inverse() == 1


# -- text format -------------------------------------------------------------------


@pytest.mark.parametrize("text", [
    "2*z^2 - 1",
    "0",
    "-z",
    "i",
    "-3i*z",
    "(1/2 + 3i)*z + 3/2*i",
    "(1/2 - i)*z^3 - 1/3",
    "3*exp(z) - z*exp(-z^2)",
    "(z + 1)*exp(2*z)",
    "z + exp(-z) + 2i*exp(3*z^2 + z)",
])
def test_canonical_text_round_trips(text):
    assert str(parse_exppoly(text)) == text


def test_parse_accepts_synonyms_and_normalizes():
    assert parse_poly("z**2 - 1") == PELL_D
    assert str(parse_exppoly("exp(z)*exp(z) - exp(2*z) + z*z")) == "z^2"
    assert str(parse_exppoly("z/2 + 3*i/4")) == "1/2*z + 3/4*i"


@pytest.mark.parametrize("text,pos", [("z +", 3), ("z/z", 1), ("q", 0), ("2 ^ z", 4), ("(z", 2), ("z $ 1", 2)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_exppoly(text)
    assert info.value.position == pos


def test_exp_with_constant_term_is_rejected():
    with pytest.raises(NonzeroConstantExponent):
        parse_exppoly("exp(z + 1)")
    with pytest.raises(NonzeroConstantExponent):
        ExpPoly.exp(Poly.from_list([2, 1]))


def test_parse_poly_rejects_exp():
    with pytest.raises(ParseError):
        parse_poly("exp(z)")


@given(exppolys())
def test_format_parse_identity(e):
    assert parse_exppoly(format_exppoly(e)) == e


# -- polynomial ring --------------------------------------------------------------


@given(polys(gaussians), polys(gaussians), polys(gaussians))
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()


@given(polys(gaussians), polys(gaussians, 2))
def test_poly_divmod(a, b):
    if not b:
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


def test_poly_degree_and_ops():
    p = parse_poly("2*z^2 - 1")
    assert p.degree == 2 and Poly().degree < 0
    assert poly_arith(p, Z, "mul") == parse_poly("2*z^3 - z")
    assert p(1) == 1 and p(Fraction(1, 2)) == Fraction(-1, 2)
    assert PELL_D.exact_div(parse_poly("z - 1")) == parse_poly("z + 1")
    assert p.height() == 2


@given(polys(), st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_poly_evaluation_is_faithful(p, x):
    exact = p(GRat(Fraction(x.real), Fraction(x.imag)))
    assert abs(complex(exact) - complex(p(np.complex128(x)))) <= 1e-9 * (1 + abs(complex(exact)))


# -- exponential polynomials -----------------------------------------------------


@settings(max_examples=60)
@given(exppolys(2), exppolys(2), exppolys(2))
def test_exppoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert exp_arith(a, b, "sub") + b == a


@settings(max_examples=60)
@given(exppolys(2), exppolys(2), st.complex_numbers(max_magnitude=1.5, allow_nan=False, allow_infinity=False))
def test_exppoly_product_matches_pointwise(a, b, x):
    lhs = complex((a * b)(x))
    rhs = complex(a(x)) * complex(b(x))
    assert cmath.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-9)


def test_exp_units_invert():
    e = ExpPoly.exp(parse_poly("z^2 - z"), 3)
    assert e * e**-1 == 1
    assert str(parse_exppoly("exp(z)") ** -2) == "exp(-2*z)"


# -- the extension ring f + g*w ------------------------------------------------------


def test_fundamental_unit_powers():
    u = ExtElem.fundamental_unit()
    sq = u**2
    assert sq == ExtElem("2*z^2 - 1", "2*z")
    assert (u**-3).norm() == 1
    assert u * u**-1 == ExtElem(1, 0)
    assert ExtElem.w() * ExtElem.w() == ExtElem(PELL_D, 0)


@settings(max_examples=50)
@given(ext_elems, ext_elems, ext_elems)
def test_ext_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert ext_arith(a, b, "add") == a + b


@settings(max_examples=50)
@given(ext_elems, ext_elems)
def test_norm_is_multiplicative_and_conj_is_a_homomorphism(a, b):
    assert ext_norm(a * b) == ext_norm(a) * ext_norm(b)
    assert ext_conj(a * b) == ext_conj(a) * ext_conj(b)
    assert ext_conj(a + b) == ext_conj(a) + ext_conj(b)
    assert a * a.conj() == ExtElem(a.norm(), 0)


@settings(max_examples=40)
@given(ext_elems, ext_elems, st.complex_numbers(min_magnitude=0.1, max_magnitude=1.5,
                                                allow_nan=False, allow_infinity=False))
def test_ext_product_matches_pointwise(a, b, x):
    w = complex(np.sqrt(x - 1) * np.sqrt(x + 1))
    lhs = complex((a * b)(x, w))
    rhs = complex(a(x, w)) * complex(b(x, w))
    assert cmath.isclose(lhs, rhs, rel_tol=1e-8, abs_tol=1e-8)


@pytest.mark.parametrize("n", range(-6, 7))
def test_unit_norm_at_points(n):
    u = ExtElem.fundamental_unit() ** n
    for x in (0.3 + 0.2j, 2.0, -1.5j):
        w = complex(np.sqrt(x - 1) * np.sqrt(x + 1))
        assert abs(complex(u(x, w)) * complex(u.conj()(x, w)) - 1) < 1e-8
