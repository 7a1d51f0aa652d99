"""Parser for differential operator expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | INT '/' INT | 'x' | 'Dx' | '(' expr ')'

Products are taken left to right in the Weyl algebra, so ``Dx*x`` is
``x*Dx + 1``.  Juxtaposition (``2x``) is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ore import DiffOp


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int) -> None:
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def render(self) -> str:
        return f"{self}\n  {self.text}\n  {' ' * self.pos}^"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(msg, self.text, tok.pos)

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, value: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def parse(self) -> DiffOp:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        op = self.expr()
        if self.tok.kind != "end":
            t = self.tok
            if t.kind in ("num", "name") or t.value == "(":
                raise self.error(f"expected an operator before {t.value!r} (juxtaposition is not allowed)")
            raise self.error(f"unexpected {t.value!r}")
        return op

    def expr(self) -> DiffOp:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> DiffOp:
        acc = self.unary()
        while True:
            if self.accept("*"):
                acc = acc * self.unary()
            elif self.tok.kind == "op" and self.tok.value == "/":
                raise self.error("division is only allowed between integer literals")
            else:
                return acc

    def unary(self) -> DiffOp:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> DiffOp:
        base = self.atom()
        if not self.accept("^"):
            return base
        t = self.tok
        if t.kind == "op" and t.value == "-":
            raise self.error("negative exponent")
        if t.kind != "num" or not t.value.isdigit():
            raise self.error("exponent must be a nonnegative integer")
        self.take()
        if self.tok.kind == "op" and self.tok.value == "^":
            raise self.error("chained exponents are ambiguous; use parentheses")
        return base ** int(t.value)

    def atom(self) -> DiffOp:
        t = self.tok
        if t.kind == "num":
            if not t.value.isdigit():
                raise self.error("only integers and a/b rationals are allowed")
            self.take()
            val = Fraction(int(t.value))
            if self.accept("/"):
                d = self.tok
                if d.kind != "num" or not d.value.isdigit():
                    raise self.error("expected an integer denominator")
                self.take()
                if int(d.value) == 0:
                    raise self.error("zero denominator", d)
                val /= int(d.value)
            return DiffOp([val])
        if t.kind == "name":
            self.take()
            if t.value == "x":
                return DiffOp.x()
            if t.value == "Dx":
                return DiffOp.dx()
            raise self.error(f"unknown symbol {t.value!r} (expected x or Dx)", t)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return inner
        if t.kind == "end":
            raise self.error("unexpected end of input")
        if t.value == "/":
            raise self.error("division is only allowed between integer literals")
        raise self.error(f"unexpected {t.value!r}")


def parse_operator(text: str) -> DiffOp:
    """Parse ``text`` into a DiffOp with exact rational coefficients."""
    return _Parser(text).parse()
