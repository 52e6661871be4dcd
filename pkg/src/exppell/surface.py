"""Numerics on the two-sheeted surface w^2 = z^2 - 1.

Branch convention: sheet +1 is w = sqrt(z - 1) * sqrt(z + 1) with principal
square roots. Its cut is the segment [-1, 1], w ~ z at infinity, w(0) = i,
and sheet -1 is the negative of sheet +1.

A *surface function* is any callable ``fn(z, w)`` acting elementwise on
complex numpy arrays. Maxima over a disc are taken over equispaced samples
of its boundary circle on both sheets; by the maximum principle this is
exact up to sampling for functions holomorphic on the surface.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .algebra import ExpPoly, ExtElem, Poly
from .errors import DomainError, EvaluationOverflow

SurfaceFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]

DEFAULT_SAMPLES = 4096
MIN_SAMPLES = 64
BC_SLACK = 1e-9
GROWTH_SLACK = 1e-6
GROWTH_MIN_RADIUS = 74


def principal_w(z):
    z = np.asarray(z, dtype=complex)
    return np.sqrt(z - 1) * np.sqrt(z + 1)


@dataclass(frozen=True)
class SurfacePoint:
    z: complex
    sheet: int
    w: complex


def sheet_eval(z: complex, sheet: int = 1) -> SurfacePoint:
    if sheet not in (1, -1):
        raise ValueError("sheet must be +1 or -1")
    z = complex(z)
    return SurfacePoint(z, sheet, complex(sheet * principal_w(z)))


# -- function handles ---------------------------------------------------------


def pullback(fz: Callable) -> SurfaceFunction:
    """A function of z alone, viewed on the surface."""
    return lambda z, w: np.asarray(fz(z), dtype=complex) * np.ones_like(w)


def w_function(z, w):
    return np.asarray(w, dtype=complex)


def as_surface_function(obj) -> SurfaceFunction:
    if isinstance(obj, ExtElem):
        return lambda z, w: obj(z, w)
    if isinstance(obj, (Poly, ExpPoly)):
        return pullback(obj)
    if isinstance(obj, (int, float, complex)):
        c = complex(obj)
        return lambda z, w: np.full(np.shape(z), c, dtype=complex)
    if callable(obj):
        return obj
    raise TypeError(f"cannot view {type(obj).__name__} as a surface function")


# -- circle maxima ------------------------------------------------------------


@dataclass(frozen=True)
class CircleStats:
    center: complex
    radius: float
    M: float
    A: float
    samples: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["center"] = [self.center.real, self.center.imag]
        return d


def circle_points(center: complex, radius: float, samples: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(samples) / samples
    return complex(center) + radius * np.exp(1j * theta)


def _both_sheets(fn: SurfaceFunction, z: np.ndarray) -> np.ndarray:
    w = principal_w(z)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.concatenate([fn(z, w), fn(z, -w)])
    if not np.all(np.isfinite(vals)):
        raise EvaluationOverflow("function value exceeds the floating range on the sample circle")
    return vals


def circle_stats(fn, center: complex, radius: float, samples: int = DEFAULT_SAMPLES) -> CircleStats:
    if samples < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    fn = as_surface_function(fn)
    vals = _both_sheets(fn, circle_points(center, radius, samples))
    return CircleStats(complex(center), float(radius), float(np.max(np.abs(vals))),
                       float(np.max(vals.real)), samples)


# -- Borel-Caratheodory -------------------------------------------------------


def _exact_root(q: Fraction, n: int) -> Fraction | None:
    def iroot(m: int) -> int | None:
        r = round(m ** (1.0 / n))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == m:
                return c
        return None

    num, den = iroot(q.numerator), iroot(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def bc_constant(n: int, r: float, R: float) -> float:
    """2 / ((R/r)^(1/n) - 1); exact when R/r is a rational n-th power."""
    if n < 1:
        raise DomainError("degree n must be at least 1")
    if not 0 < r < R:
        raise DomainError(f"need 0 < r < R, got r={r}, R={R}")
    try:
        root = _exact_root(Fraction(R) / Fraction(r), n)
    except (TypeError, ValueError, OverflowError):
        root = None
    if root is not None:
        return float(2 / (root - 1))
    return 2.0 / math.expm1(math.log(R / r) / n)


@dataclass(frozen=True)
class Report:
    left: float
    right: float
    holds: bool

    def to_json(self) -> dict:
        return {"left": self.left, "right": self.right, "holds": self.holds}


def _within(left: float, right: float, slack: float) -> bool:
    return left <= right + slack * max(abs(left), abs(right))


def check_bc_inequality(h: Poly, r: float, R: float, center: complex = 1,
                        samples: int = DEFAULT_SAMPLES) -> Report:
    """M(h*w, r) <= C_2(r, R) * A(h*w, R) around ``center`` on the surface."""
    center = complex(center)
    fiber = complex(h(center)) * complex(principal_w(center))
    if abs(fiber) > 1e-12:
        raise DomainError("h*w must vanish on the fiber over the center")
    fn = lambda z, w: h(z) * w
    left = circle_stats(fn, center, r, samples).M
    right = bc_constant(2, r, R) * circle_stats(fn, center, R, samples).A
    return Report(left, right, _within(left, right, BC_SLACK))


def _log_abs_cosh_sinh(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # cosh is even and |sinh| is even, so fold onto Re u >= 0 where exp(-2u) is bounded
    a = np.where(u.real >= 0, u, -u)
    e = np.exp(-2.0 * a)
    with np.errstate(divide="ignore"):
        log_cosh = a.real - math.log(2.0) + np.log(np.abs(1.0 + e))
        log_sinh = a.real - math.log(2.0) + np.log(np.abs(-np.expm1(-2.0 * a)))
    return log_cosh, log_sinh


def growth_sides(h: Poly, r: float, samples: int = DEFAULT_SAMPLES) -> tuple[float, float, float]:
    """(M(h, r), log max{M(f, 2r), M(g, 2r)}, right-hand side) for exp(h*w) = f + g*w.

    f = cosh(h*w) and g = sinh(h*w)/w are even in w, hence entire in z; their
    logarithms are evaluated directly so that large h*w does not overflow.
    """
    z = circle_points(0, r, samples)
    left = float(np.max(np.abs(h(z))))
    z2 = circle_points(0, 2 * r, samples)
    w2 = principal_w(z2)
    u = h(z2) * w2
    log_f, log_sinh = _log_abs_cosh_sinh(u)
    log_g = log_sinh - np.log(np.abs(w2))
    logmax = float(max(np.max(log_f), np.max(log_g)))
    if not math.isfinite(logmax):
        raise EvaluationOverflow("log-modulus of cosh/sinh is not finite")
    right = 6.0 / r * logmax + 12.0 * math.log(r) / r
    return left, logmax, right


def check_growth_lemma(h: Poly, r: float, samples: int = DEFAULT_SAMPLES) -> Report:
    if r < GROWTH_MIN_RADIUS:
        raise DomainError(f"radius must be at least {GROWTH_MIN_RADIUS}, got {r}")
    if samples < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    left, _, right = growth_sides(h, r, samples)
    return Report(left, right, _within(left, right, GROWTH_SLACK))


def check_poly_growth(fn, alpha: float, radii: Sequence[float], samples: int = DEFAULT_SAMPLES,
                      slack: float = 2.0) -> bool:
    """Whether M(fn, r) <= K * r^alpha on every radius, K fitted at the smallest radius.

    A plausibility check for polynomial growth of degree <= floor(alpha), not a proof.
    """
    radii = sorted(float(x) for x in radii)
    if len(radii) < 3:
        raise DomainError("need at least three radii")
    fz = fn if not isinstance(fn, (int, float, complex)) else (lambda z, c=complex(fn): np.full(np.shape(z), c))
    logs = []
    for r in radii:
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.abs(np.asarray(fz(circle_points(0, r, samples)), dtype=complex))
        m = float(np.max(vals))
        logs.append(math.log(m) if m > 0 else -math.inf)
    if not math.isfinite(logs[0]):
        return all(x == -math.inf for x in logs)
    log_k = math.log(slack) + logs[0] - alpha * math.log(radii[0])
    return all(math.isfinite(x) or x == -math.inf for x in logs) and all(
        x <= log_k + alpha * math.log(r) + 1e-12 for x, r in zip(logs, radii)
    )
