"""Solutions of the functional Pell equation x^2 - (z^2 - 1) y^2 = 1 over Z[z].

Every solution is x + y*w = sign * (z + w)^n with w^2 = z^2 - 1; the pair
(x_n, y_n) for sign +1 is generated by the recurrence

    (x_{k+1}, y_{k+1}) = (z*x_k + (z^2 - 1)*y_k, x_k + z*y_k),  (x_0, y_0) = (1, 0)

and (x_{-n}, y_{-n}) = (x_n, -y_n).  y_n(1) = n and x_n(1) = 1, so the index
of a solution can be read off at z = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ExtElem, PELL_D, Poly
from .errors import IndexTooLarge, NonIntegerCoefficients, NotAPellSolution

DEFAULT_INDEX_CAP = 10_000


@dataclass(frozen=True)
class PellSolution:
    x: Poly
    y: Poly
    sign: int
    index: int

    def as_ext(self) -> ExtElem:
        return ExtElem(self.x, self.y)

    def to_json(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "sign": self.sign, "index": self.index}


@lru_cache(maxsize=256)
def _pell_ints(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # dense ascending integer coefficients of (x_n, y_n), n >= 0
    x, y = [1], [0]
    for _ in range(n):
        nx = [0] * (len(x) + 2)
        ny = [0] * (len(x) + 1)
        for k, c in enumerate(x):
            nx[k + 1] += c  # z*x
            ny[k] += c  # x
        for k, c in enumerate(y):
            nx[k + 2] += c  # z^2*y
            nx[k] -= c  # -y
            ny[k + 1] += c  # z*y
        x, y = nx, ny
    return tuple(x), tuple(y)


def pell_pair(n: int, cap: int = DEFAULT_INDEX_CAP) -> PellSolution:
    if abs(n) > cap:
        raise IndexTooLarge(f"|{n}| exceeds the index cap {cap}")
    xs, ys = _pell_ints(abs(n))
    x = Poly.from_list(xs)
    y = Poly.from_list(ys)
    if n < 0:
        y = -y
    return PellSolution(x, y, 1, n)


def pell_verify(x: Poly, y: Poly) -> bool:
    return x * x - PELL_D * y * y == 1


def pell_recognize(x: Poly, y: Poly, cap: int = DEFAULT_INDEX_CAP) -> tuple[int, int]:
    """Return (sign, n) with x + y*w = sign * (z + w)^n."""
    if not pell_verify(x, y):
        raise NotAPellSolution(f"({x})^2 - (z^2 - 1)*({y})^2 != 1")
    if not (x.is_integer() and y.is_integer()):
        raise NonIntegerCoefficients(f"solution ({x}, {y}) is not in Z[z]")
    sign = x(1)
    if sign not in (1, -1):
        raise NotAPellSolution(f"x(1) = {sign} is not a unit")
    sign = int(sign.re)
    n = sign * int(y(1).re)
    if abs(n) > cap:
        raise IndexTooLarge(f"|{n}| exceeds the index cap {cap}")
    ref = pell_pair(n, cap)
    if ref.x * sign != x or ref.y * sign != y:
        raise NotAPellSolution(f"({x}, {y}) does not expand to {sign}*(z + w)^{n}")
    return sign, n


def pell_compose(a: PellSolution, b: PellSolution) -> PellSolution:
    prod = a.as_ext() * b.as_ext()
    return PellSolution(prod.f.as_poly(), prod.g.as_poly(), a.sign * b.sign, a.index + b.index)


def signed(sol: PellSolution, sign: int) -> PellSolution:
    """The solution sign * (x_n + y_n*w)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return PellSolution(sol.x * sign, sol.y * sign, sol.sign * sign, sol.index)


def pell_pairs_in_box(degree: int, height: int) -> list[tuple[Poly, Poly, int]]:
    """All solutions (x, y) in Z[z] with both degrees <= degree and heights <= height.

    By the classification these are exactly (+-x_n, y_n) for the admissible n;
    returned as (x, y, n).
    """
    out = []
    for m in range(0, degree + 1):
        sol = pell_pair(m)
        if sol.x.height() > height or sol.y.height() > height:
            continue
        for n in {m, -m}:
            y = sol.y if n >= 0 else -sol.y
            out.append((sol.x, y, n))
            out.append((-sol.x, y, n))
    return out
