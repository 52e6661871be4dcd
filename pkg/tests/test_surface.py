import math

import numpy as np
import pytest

from exppell.algebra import ExtElem, Poly, parse_exppoly, parse_poly
from exppell.errors import DomainError, EvaluationOverflow
from exppell.pell import pell_pair
from exppell.surface import (
    bc_constant,
    check_bc_inequality,
    check_growth_lemma,
    check_poly_growth,
    circle_stats,
    growth_sides,
    principal_w,
    pullback,
    sheet_eval,
    w_function,
)


def test_branch_convention():
    assert sheet_eval(1, 1).w == 0 and sheet_eval(1, -1).w == 0
    assert sheet_eval(0, 1).w == 1j
    assert sheet_eval(0, -1).w == -1j
    big = sheet_eval(1e6, 1).w
    assert abs(big / 1e6 - 1) < 1e-9
    for z in (0.3 + 2j, -5 + 0.1j, 2.0, -0.5j):
        p, m = sheet_eval(z, 1), sheet_eval(z, -1)
        assert p.w == -m.w
        assert abs(p.w**2 - (z * z - 1)) <= 1e-12 * (1 + abs(z) ** 2)
    with pytest.raises(ValueError):
        sheet_eval(0, 2)


@pytest.mark.parametrize("rho", [0.5, 1, 3])
def test_modulus_on_imaginary_axis(rho):
    assert abs(abs(sheet_eval(1j * rho).w) - math.sqrt(rho * rho + 1)) < 1e-12


@pytest.mark.parametrize("rho", [1, 2, 10, 74])
def test_max_modulus_of_w(rho):
    assert abs(circle_stats(w_function, 0, rho).M - math.sqrt(rho * rho + 1)) <= 1e-6


def test_circle_stats_simple_functions():
    s = circle_stats(3 - 4j, 0, 2)
    assert s.M == pytest.approx(5) and s.A == pytest.approx(3)
    assert circle_stats(Poly.parse("z"), 0, 1).M == pytest.approx(1)
    assert circle_stats(parse_exppoly("z^2"), 0, 2, samples=64).M == pytest.approx(4)
    with pytest.raises(DomainError):
        circle_stats(w_function, 0, 1, samples=10)
    with pytest.raises(EvaluationOverflow):
        circle_stats(parse_exppoly("exp(z^3)"), 0, 50)
    assert circle_stats(w_function, 0, 2).to_json()["center"] == [0.0, 0.0]


def test_sheet_symmetry_for_even_functions():
    z = 0.7 * np.exp(1j * np.linspace(0, 2 * np.pi, 257)) + 0.2
    w = principal_w(z)
    fn = lambda z, w: np.cosh((z * z) * w)
    assert np.max(np.abs(fn(z, w) - fn(z, -w))) <= 1e-10


@pytest.mark.parametrize("fn", [w_function, ExtElem.fundamental_unit(), pullback(lambda z: np.exp(z))])
def test_max_modulus_is_monotone(fn):
    ms = [circle_stats(fn, 0.5, r, 1024).M for r in (0.5, 1, 2, 4, 8)]
    assert all(a <= b * (1 + 1e-9) for a, b in zip(ms, ms[1:]))


def test_bc_constant():
    assert bc_constant(2, 75, 147) == 5.0
    assert bc_constant(1, 3, 6) == 2.0
    assert bc_constant(2, 10, 30) == pytest.approx(2 / (math.sqrt(3) - 1))
    for bad in [(2, 100, 100), (2, 5, 1), (0, 1, 2)]:
        with pytest.raises(DomainError):
            bc_constant(*bad)


@pytest.mark.parametrize("h,r,R", [("1", 75, 147), ("0", 75, 147), ("z^2", 100, 199), ("z - 3", 5, 9)])
def test_bc_inequality(h, r, R):
    rep = check_bc_inequality(parse_poly(h), r, R, samples=2048)
    assert rep.holds
    if h == "0":
        assert rep.left == 0 and rep.right == 0


def test_bc_inequality_needs_vanishing_fiber():
    with pytest.raises(DomainError):
        check_bc_inequality(parse_poly("1"), 1, 2, center=3)


@pytest.mark.parametrize("h", ["0", "1", "z", "z^2", "z^3"])
@pytest.mark.parametrize("r", [74, 100, 200])
def test_growth_lemma(h, r):
    assert check_growth_lemma(parse_poly(h), r).holds


def test_growth_lemma_sides():
    left, logmax, right = growth_sides(parse_poly("0"), 74)
    assert left == 0 and logmax == pytest.approx(0, abs=1e-12)
    left, _, _ = growth_sides(parse_poly("z^3"), 200, 512)
    assert left == pytest.approx(8e6)
    with pytest.raises(DomainError):
        check_growth_lemma(parse_poly("z"), 10)


def test_growth_log_domain_matches_direct_evaluation():
    # small enough that cosh and sinh are representable directly
    h = parse_poly("z")
    r = 3.0
    _, logmax, _ = growth_sides(h, r, 512)
    z = 2 * r * np.exp(2j * np.pi * np.arange(512) / 512)
    w = principal_w(z)
    direct = max(np.max(np.abs(np.cosh(z * w))), np.max(np.abs(np.sinh(z * w) / w)))
    assert logmax == pytest.approx(math.log(direct), rel=1e-9)


def test_poly_growth():
    radii = [10, 20, 50, 100]
    assert check_poly_growth(lambda z: z**3, 3, radii)
    assert not check_poly_growth(np.exp, 10, radii)
    assert check_poly_growth(5, 0, radii)
    assert not check_poly_growth(lambda z: z**4, 3, radii)
    with pytest.raises(DomainError):
        check_poly_growth(5, 0, [1, 2])


def test_norm_at_points():
    rng = np.random.default_rng(7)
    for n in rng.integers(-6, 7, size=10):
        s = pell_pair(int(n))
        pts = rng.uniform(0, 2, 50) * np.exp(1j * rng.uniform(0, 2 * np.pi, 50))
        vals = s.x(pts) ** 2 - (pts**2 - 1) * s.y(pts) ** 2 - 1
        assert np.max(np.abs(vals)) <= 1e-6
