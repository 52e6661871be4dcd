"""Sparse multivariate polynomials with int or Poly coefficients.

A monomial is a tuple of (variable, exponent) pairs sorted by variable
name; the empty tuple is the constant monomial.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

Monomial = tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: dict[Monomial, object] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({ONE_MONO: c})

    @staticmethod
    def _lift(other) -> MPoly:
        return other if isinstance(other, MPoly) else MPoly.const(other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> MPoly:
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> MPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> MPoly:
        other = self._lift(other)
        out: dict[Monomial, object] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                p = ca * cb
                out[m] = out[m] + p if m in out else p
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise ValueError("negative exponent")
        out, base = MPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- inspection -----------------------------------------------------------

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant(self):
        """The constant coefficient (0 when absent)."""
        return self.terms.get(ONE_MONO, 0)

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def degree_in(self, v: str) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=-1)

    def univariate(self, v: str) -> dict[int, object]:
        """Coefficients by power of v; only valid when v is the sole variable."""
        out: dict[int, object] = {}
        for m, c in self.terms.items():
            if any(name != v for name, _ in m):
                raise ValueError(f"{v} is not the only variable")
            e = m[0][1] if m else 0
            out[e] = c
        return out

    # -- transformation ---------------------------------------------------------

    def map_coeffs(self, f: Callable) -> MPoly:
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            fc = f(c)
            out[m] = out[m] + fc if m in out else fc
        return MPoly(out)

    def substitute(self, v: str, value) -> MPoly:
        """Replace the variable v by a coefficient-ring value."""
        powers = {0: 1}
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for name, k in m:
                if name == v:
                    e = k
                else:
                    rest.append((name, k))
            if e:
                if e not in powers:
                    powers[e] = value**e
                c = c * powers[e]
            key = tuple(rest)
            out[key] = out[key] + c if key in out else c
        return MPoly(out)

    def evaluate(self, assignment: Mapping[str, object]):
        acc = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * assignment[v] ** e
            acc = acc + t
        return acc

    def compiled(self) -> list[tuple[object, tuple[tuple[str, int], ...]]]:
        return list(self.terms.items())

    def __repr__(self) -> str:
        return f"MPoly({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0])):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def mpoly_sum(items: Iterable[MPoly]) -> MPoly:
    acc = MPoly()
    for x in items:
        acc = acc + x
    return acc
