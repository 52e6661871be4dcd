"""Positive-existential formulas over the language {0, 1, z, +, *, =}.

There is no constructor for negation or universal quantification, so every
Formula is positive existential by construction.

S-expression syntax::

    term    := 0 | 1 | z | NAME | (+ term term) | (* term term)
    formula := (= term term) | (and formula formula) | (or formula formula)
             | (exists NAME formula)

NAME matches ``[A-Za-z_][A-Za-z0-9_]*`` and may not be ``z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from ..errors import ParseError

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"z"})


class Term:
    __slots__ = ()

    def __add__(self, other: Term) -> Term:
        return Add(self, as_term(other))

    def __radd__(self, other) -> Term:
        return Add(as_term(other), self)

    def __mul__(self, other: Term) -> Term:
        return Mul(self, as_term(other))

    def __rmul__(self, other) -> Term:
        return Mul(as_term(other), self)

    def __str__(self) -> str:
        return to_sexpr(self)


@dataclass(frozen=True, eq=True)
class Zero(Term):
    pass


@dataclass(frozen=True, eq=True)
class One(Term):
    pass


@dataclass(frozen=True, eq=True)
class ZVar(Term):
    """The distinguished constant z."""


@dataclass(frozen=True, eq=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not NAME_RE.match(self.name) or self.name in RESERVED:
            raise ValueError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True, eq=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=True)
class Mul(Term):
    left: Term
    right: Term


class Formula:
    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __str__(self) -> str:
        return to_sexpr(self)


@dataclass(frozen=True, eq=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True, eq=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=True)
class Exists(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        Var(self.var)


Node = Union[Term, Formula]

ZERO = Zero()
ONE = One()
Z = ZVar()


def as_term(x) -> Term:
    if isinstance(x, Term):
        return x
    if isinstance(x, str):
        return Z if x == "z" else Var(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return numeral(x)
    raise TypeError(f"cannot make a term from {x!r}")


def numeral(c: int) -> Term:
    """The closed term for c >= 0, by binary doubling: size O(log c)."""
    if c < 0:
        raise ValueError("numerals are nonnegative; move negative constants across '='")
    if c == 0:
        return ZERO
    if c == 1:
        return ONE
    two = Add(ONE, ONE)
    if c == 2:
        return two
    half = numeral(c // 2)
    doubled = two if half == ONE else Mul(two, half)
    return Add(doubled, ONE) if c % 2 else doubled


def conj(formulas: Iterable[Formula]) -> Formula:
    """Right-nested conjunction of one or more formulas."""
    fs = list(formulas)
    if not fs:
        raise ValueError("empty conjunction")
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = And(f, out)
    return out


def exists_all(names: Iterable[str], body: Formula) -> Formula:
    for name in reversed(list(names)):
        body = Exists(name, body)
    return body


# -- traversal ----------------------------------------------------------------


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, (Add, Mul)):
        return term_vars(t.left) | term_vars(t.right)
    return set()


def free_vars(f: Node) -> set[str]:
    if isinstance(f, Term):
        return term_vars(f)
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, (And, Or)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Exists):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def all_names(f: Node) -> set[str]:
    if isinstance(f, Term):
        return term_vars(f)
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, (And, Or)):
        return all_names(f.left) | all_names(f.right)
    if isinstance(f, Exists):
        return all_names(f.body) | {f.var}
    raise TypeError(f"not a formula: {f!r}")


def atoms(f: Formula) -> Iterator[Eq]:
    if isinstance(f, Eq):
        yield f
    elif isinstance(f, (And, Or)):
        yield from atoms(f.left)
        yield from atoms(f.right)
    elif isinstance(f, Exists):
        yield from atoms(f.body)


def quantifier_count(f: Formula) -> int:
    if isinstance(f, Exists):
        return 1 + quantifier_count(f.body)
    if isinstance(f, (And, Or)):
        return quantifier_count(f.left) + quantifier_count(f.right)
    return 0


class NameSupply:
    """Deterministic fresh names: ``base`` if unused, else ``base1``, ``base2``, ..."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken) | set(RESERVED)
        self._next: dict[str, int] = {}

    def fresh(self, base: str) -> str:
        if base not in self.taken:
            self.taken.add(base)
            return base
        k = self._next.get(base, 1)
        while f"{base}{k}" in self.taken:
            k += 1
        self._next[base] = k + 1
        name = f"{base}{k}"
        self.taken.add(name)
        return name


def substitute(f: Node, mapping: dict[str, Term]) -> Node:
    """Replace free variables, renaming bound ones that would capture."""
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Add):
        return Add(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Mul):
        return Mul(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Term):
        return f
    if isinstance(f, Eq):
        return Eq(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, And):
        return And(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Or):
        return Or(substitute(f.left, mapping), substitute(f.right, mapping))
    if isinstance(f, Exists):
        inner = {k: v for k, v in mapping.items() if k != f.var}
        if not inner:
            return f
        incoming = set().union(*(term_vars(t) for t in inner.values()))
        var, body = f.var, f.body
        if var in incoming:
            supply = NameSupply(all_names(body) | incoming | set(inner))
            new = supply.fresh(var)
            body = substitute(body, {var: Var(new)})
            var = new
        return Exists(var, substitute(body, inner))
    raise TypeError(f"not a formula: {f!r}")


# -- S-expressions ------------------------------------------------------------


def to_sexpr(f: Node) -> str:
    parts: list[str] = []

    def emit(n: Node) -> None:
        if isinstance(n, Zero):
            parts.append("0")
        elif isinstance(n, One):
            parts.append("1")
        elif isinstance(n, ZVar):
            parts.append("z")
        elif isinstance(n, Var):
            parts.append(n.name)
        elif isinstance(n, (Add, Mul, Eq, And, Or)):
            head = {Add: "+", Mul: "*", Eq: "=", And: "and", Or: "or"}[type(n)]
            parts.append(f"({head} ")
            emit(n.left)
            parts.append(" ")
            emit(n.right)
            parts.append(")")
        elif isinstance(n, Exists):
            parts.append(f"(exists {n.var} ")
            emit(n.body)
            parts.append(")")
        else:
            raise TypeError(f"not a term or formula: {n!r}")

    emit(f)
    return "".join(parts)


_SX_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def _sx_tokens(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while True:
        m = _SX_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError("unexpected input", pos, text)
            return out
        out.append((m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()


def parse_sexpr(text: str) -> Node:
    tokens = _sx_tokens(text)
    i = 0

    def peek() -> tuple[str, int]:
        return tokens[i] if i < len(tokens) else ("", len(text))

    def take() -> tuple[str, int]:
        nonlocal i
        tok = peek()
        if not tok[0]:
            raise ParseError("unexpected end of input", tok[1], text)
        i += 1
        return tok

    def node() -> Node:
        tok, pos = take()
        if tok == ")":
            raise ParseError("unexpected ')'", pos, text)
        if tok != "(":
            if tok == "0":
                return ZERO
            if tok == "1":
                return ONE
            if tok == "z":
                return Z
            if not NAME_RE.match(tok):
                raise ParseError(f"bad atom {tok!r}", pos, text)
            return Var(tok)
        head, hpos = take()
        if head == "exists":
            name, npos = take()
            if not NAME_RE.match(name) or name in RESERVED:
                raise ParseError(f"bad variable {name!r}", npos, text)
            body = node()
            result: Node = Exists(name, body)
        elif head in ("+", "*", "=", "and", "or"):
            a, b = node(), node()
            want_terms = head in ("+", "*", "=")
            for x in (a, b):
                if want_terms != isinstance(x, Term):
                    kind = "term" if want_terms else "formula"
                    raise ParseError(f"'{head}' expects {kind} arguments", hpos, text)
            cls = {"+": Add, "*": Mul, "=": Eq, "and": And, "or": Or}[head]
            result = cls(a, b)
        else:
            raise ParseError(f"unknown head {head!r}", hpos, text)
        tok, pos = take()
        if tok != ")":
            raise ParseError("expected ')'", pos, text)
        return result

    result = node()
    if i != len(tokens):
        raise ParseError("trailing input", tokens[i][1], text)
    return result
