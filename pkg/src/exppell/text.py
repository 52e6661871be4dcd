"""Tokenizer and a small recursive-descent expression parser.

Grammar (``^`` and ``**`` are synonyms)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('+' | '-') factor | power
    power   := primary ['^' INT]
    primary := INT ['i'] | NAME ['(' expr ')'] | '(' expr ')'

An integer immediately followed by ``i`` (``3i``) means ``3*i``. Subclasses
decide what names, calls and division mean.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()=;,]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    value: str
    pos: int
    end: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        value = m.group(kind)
        if value == "**":
            value = "^"
        tokens.append(Token(kind, value, m.start(kind), m.end()))
        pos = m.end()
    tokens.append(Token("end", "", len(text), len(text)))
    return tokens


class ExprParser:
    imaginary_suffix = False

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    # hooks -------------------------------------------------------------------

    def number(self, n: int, pos: int):
        raise NotImplementedError

    def name(self, name: str, pos: int):
        raise ParseError(f"unknown name {name!r}", pos, self.text)

    def call(self, name: str, arg, pos: int):
        raise ParseError(f"unknown function {name!r}", pos, self.text)

    def divide(self, a, b, pos: int):
        raise ParseError("division is not allowed here", pos, self.text)

    # machinery -----------------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def accept(self, value: str) -> Token | None:
        if self.tok.kind == "op" and self.tok.value == value:
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, value: str) -> Token:
        t = self.accept(value)
        if t is None:
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        return t

    def at_end(self) -> bool:
        return self.tok.kind == "end"

    def parse(self):
        value = self.expr()
        if not self.at_end():
            raise self.error(f"unexpected {self.tok.value!r}")
        return value

    def expr(self):
        if self.accept("-"):
            value = -self.term()
        else:
            self.accept("+")
            value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.accept("*"):
                value = value * self.factor()
            elif (t := self.accept("/")) is not None:
                value = self.divide(value, self.factor(), t.pos)
            else:
                return value

    def factor(self):
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        return self.power()

    def power(self):
        base = self.primary()
        if self.accept("^"):
            t = self.tok
            if t.kind != "num":
                raise self.error("exponent must be a nonnegative integer literal")
            self.i += 1
            return base ** int(t.value)
        return base

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            value = self.number(int(t.value), t.pos)
            nxt = self.tok
            if (
                self.imaginary_suffix
                and nxt.kind == "name"
                and nxt.value == "i"
                and nxt.pos == t.end
            ):
                self.i += 1
                value = value * self.name("i", nxt.pos)
            return value
        if t.kind == "name":
            self.i += 1
            if self.accept("("):
                arg = self.expr()
                self.expect(")")
                return self.call(t.value, arg, t.pos)
            return self.name(t.value, t.pos)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        found = t.value or "end of input"
        raise self.error(f"unexpected {found!r}")
