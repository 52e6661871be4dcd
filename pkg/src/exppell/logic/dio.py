"""Diophantine systems over Z and their three-address normal form.

Input grammar: equations ``P = Q`` separated by ``;`` where P and Q use
integer literals, variables, ``+ - *`` and ``^`` (or ``**``) with a literal
exponent. Variable names follow the usual identifier rules; ``z`` is
reserved for the polynomial indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from ..errors import DioSyntaxError, ParseError
from ..text import ExprParser
from .formula import NameSupply
from .mpoly import MPoly, Monomial


@dataclass(frozen=True)
class Equation:
    lhs: MPoly
    rhs: MPoly

    @property
    def difference(self) -> MPoly:
        return self.lhs - self.rhs

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class DioSystem:
    equations: tuple[Equation, ...]
    variables: tuple[str, ...]  # in order of first appearance

    def holds(self, values: dict[str, int]) -> bool:
        return all(not eq.difference.evaluate(values) for eq in self.equations)

    def __str__(self) -> str:
        return "; ".join(str(e) for e in self.equations)


class _DioParser(ExprParser):
    def __init__(self, text: str):
        try:
            super().__init__(text)
        except ParseError as e:
            raise DioSyntaxError(str(e).rsplit(" at position", 1)[0], e.position, text) from None
        self.seen: list[str] = []

    def error(self, message, tok=None):
        tok = tok or self.tok
        return DioSyntaxError(message, tok.pos, self.text)

    def number(self, n, pos):
        return MPoly.const(n)

    def name(self, name, pos):
        if name == "z":
            raise DioSyntaxError("'z' is reserved and cannot be a variable", pos, self.text)
        if name not in self.seen:
            self.seen.append(name)
        return MPoly.var(name)

    def call(self, name, arg, pos):
        raise DioSyntaxError(f"function calls are not allowed ({name!r})", pos, self.text)

    def divide(self, a, b, pos):
        raise DioSyntaxError("division is not allowed", pos, self.text)

    def system(self) -> DioSystem:
        eqs = []
        while not self.at_end():
            if self.accept(";"):
                continue
            lhs = self.expr()
            self.expect("=")
            rhs = self.expr()
            eqs.append(Equation(lhs, rhs))
            if not self.at_end():
                self.expect(";")
        if not eqs:
            raise DioSyntaxError("no equations", 0, self.text)
        return DioSystem(tuple(eqs), tuple(self.seen))


def parse_dio(text: str) -> DioSystem:
    return _DioParser(text).system()


# -- three-address form -------------------------------------------------------


@dataclass(frozen=True)
class ConstEq:
    """v = c for a nonnegative integer c."""

    v: str
    c: int

    def __str__(self) -> str:
        return f"{self.v}={self.c}"


@dataclass(frozen=True)
class AddEq:
    v: str
    a: str
    b: str

    def __str__(self) -> str:
        return f"{self.v}={self.a}+{self.b}"


@dataclass(frozen=True)
class MulEq:
    v: str
    a: str
    b: str

    def __str__(self) -> str:
        return f"{self.v}={self.a}*{self.b}"


@dataclass(frozen=True)
class VarEq:
    v: str
    w: str

    def __str__(self) -> str:
        return f"{self.v}={self.w}"


Constraint = Union[ConstEq, AddEq, MulEq, VarEq]


def constraint_holds(c: Constraint, values: dict[str, int]) -> bool:
    if isinstance(c, ConstEq):
        return values[c.v] == c.c
    if isinstance(c, AddEq):
        return values[c.v] == values[c.a] + values[c.b]
    if isinstance(c, MulEq):
        return values[c.v] == values[c.a] * values[c.b]
    return values[c.v] == values[c.w]


class _Normalizer:
    def __init__(self, sysm: DioSystem):
        self.sys = sysm
        self.names = NameSupply(sysm.variables)
        self.out: list[Constraint] = []
        self.memo: dict[object, str] = {}
        self.counter = 0

    def fresh(self) -> str:
        while True:
            self.counter += 1
            name = f"t{self.counter}"
            if name not in self.names.taken:
                self.names.taken.add(name)
                return name

    def const(self, c: int) -> str:
        key = ("const", c)
        if key not in self.memo:
            v = self.fresh()
            self.out.append(ConstEq(v, c))
            self.memo[key] = v
        return self.memo[key]

    def binop(self, cls, a: str, b: str) -> str:
        key = (cls.__name__, a, b)
        if key not in self.memo:
            v = self.fresh()
            self.out.append(cls(v, a, b))
            self.memo[key] = v
        return self.memo[key]

    def monomial(self, m: Monomial) -> str:
        factors = [v for v, e in m for _ in range(e)]
        acc = factors[0]
        for f in factors[1:]:
            acc = self.binop(MulEq, acc, f)
        return acc

    def side(self, terms: dict[Monomial, int]) -> str:
        if not terms:
            return self.const(0)
        order = {v: i for i, v in enumerate(self.sys.variables)}

        def key(item):
            m, _ = item
            return (0 if m else 1, -sum(e for _, e in m), [(order[v], -e) for v, e in m])

        pieces = []
        for m, c in sorted(terms.items(), key=key):
            if not m:
                pieces.append(self.const(c))
                continue
            mv = self.monomial(m)
            pieces.append(mv if c == 1 else self.binop(MulEq, self.const(c), mv))
        acc = pieces[0]
        for p in pieces[1:]:
            acc = self.binop(AddEq, acc, p)
        return acc

    def run(self) -> list[Constraint]:
        for eq in self.sys.equations:
            diff = eq.difference
            pos = {m: c for m, c in diff.terms.items() if c > 0}
            neg = {m: -c for m, c in diff.terms.items() if c < 0}
            self.out.append(VarEq(self.side(pos), self.side(neg)))
        return self.out


def normalize_dio(sysm: DioSystem) -> list[Constraint]:
    """Three-address constraints equisatisfiable with the system over Z.

    Each equation P = Q becomes L = R with L and R the positive and negative
    parts of P - Q, so no constraint mentions subtraction or a negative
    constant. Fresh variables are t1, t2, ... (skipping names already used)
    and shared subterms are introduced once.
    """
    return _Normalizer(sysm).run()


def constraint_variables(sysm: DioSystem, constraints: Sequence[Constraint]) -> list[str]:
    """Original variables first, then fresh ones in order of introduction."""
    out = list(sysm.variables)
    for c in constraints:
        if isinstance(c, (ConstEq, AddEq, MulEq)) and c.v not in out:
            out.append(c.v)
    return out


def extend_solution(constraints: Sequence[Constraint], values: dict[str, int]) -> dict[str, int]:
    """Values of the fresh variables determined by an assignment of the originals."""
    full = dict(values)
    for c in constraints:
        if isinstance(c, ConstEq):
            full[c.v] = c.c
        elif isinstance(c, AddEq):
            full[c.v] = full[c.a] + full[c.b]
        elif isinstance(c, MulEq):
            full[c.v] = full[c.a] * full[c.b]
    return full


# -- integer oracle -------------------------------------------------------------


def integer_solutions(sysm: DioSystem, bound: int = 100, limit: int | None = None) -> Iterator[dict[str, int]]:
    """Brute force over |x| <= bound, pruning on equations whose variables are fixed."""
    names = list(sysm.variables)
    diffs = [eq.difference for eq in sysm.equations]
    ready_at = []
    for d in diffs:
        vs = d.variables()
        ready_at.append(max((names.index(v) for v in vs), default=-1))
    order = [0] + [s * n for n in range(1, bound + 1) for s in (1, -1)]
    found = 0

    def rec(i: int, vals: dict[str, int]):
        nonlocal found
        for d, r in zip(diffs, ready_at):
            if r == i - 1 and d.evaluate(vals) != 0:
                return
        if i == len(names):
            found += 1
            yield dict(vals)
            return
        for x in order:
            vals[names[i]] = x
            yield from rec(i + 1, vals)
            if limit is not None and found >= limit:
                return
        del vals[names[i]]

    yield from rec(0, {})


def first_integer_solution(sysm: DioSystem, bound: int = 100) -> dict[str, int] | None:
    return next(integer_solutions(sysm, bound, limit=1), None)
