"""Parser for element expressions such as ``h[2,0]^2 * h[2,1]^2 + h[1,0]``.

Grammar::

    expr   := term { "+" term }
    term   := factor { "*" factor }
    factor := atom [ "^" uint ]
    atom   := "h[" uint "," uint "]" | "1" | "0"

Whitespace between tokens is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, SemanticError
from .ring import RPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))?")


@dataclass(frozen=True)
class Gen:
    t: int
    s: int
    pos: int = 0

    def evaluate(self) -> RPoly:
        if not self.s < self.t:
            raise SemanticError(f"h[{self.t},{self.s}] at position {self.pos}: need s < t")
        return RPoly.gen(self.t, self.s)


@dataclass(frozen=True)
class Const:
    value: int

    def evaluate(self) -> RPoly:
        return RPoly.one() if self.value else RPoly.zero()


@dataclass(frozen=True)
class Power:
    base: Gen | Const
    exponent: int

    def evaluate(self) -> RPoly:
        return self.base.evaluate() ** self.exponent


@dataclass(frozen=True)
class Product:
    factors: tuple

    def evaluate(self) -> RPoly:
        result = RPoly.one()
        for f in self.factors:
            result = result * f.evaluate()
        return result


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def evaluate(self) -> RPoly:
        result = RPoly.zero()
        for t in self.terms:
            result = result + t.evaluate()
        return result


ElementExpr = Sum


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match.group(1) is None and match.group(2) is None:
            break  # trailing whitespace
        if match.group(1) is not None:
            tokens.append(("int", match.group(1), match.start(1)))
        else:
            tokens.append(("sym", match.group(2), match.start(2)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, sym: str) -> None:
        kind, value, pos = self.take()
        if kind != "sym" or value != sym:
            raise ParseError(f"expected {sym!r}, found {value or 'end of input'!r}", pos)

    def uint(self) -> int:
        kind, value, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer, found {value or 'end of input'!r}", pos)
        return int(value)

    def expr(self) -> Sum:
        terms = [self.term()]
        while self.peek()[:2] == ("sym", "+"):
            self.take()
            terms.append(self.term())
        return Sum(tuple(terms))

    def term(self) -> Product:
        factors = [self.factor()]
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            factors.append(self.factor())
        return Product(tuple(factors))

    def factor(self):
        atom = self.atom()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            return Power(atom, self.uint())
        return atom

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            if value in ("0", "1"):
                return Const(int(value))
            raise ParseError(f"only the constants 0 and 1 are allowed, found {value!r}", pos)
        if kind == "sym" and value == "h":
            self.expect("[")
            t = self.uint()
            self.expect(",")
            s = self.uint()
            self.expect("]")
            return Gen(t, s, pos)
        raise ParseError(f"expected a generator or constant, found {value or 'end of input'!r}", pos)


def parse_element(text: str) -> Sum:
    """Parse ``text`` into an expression tree; raises ParseError with a position."""
    parser = _Parser(text)
    tree = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return tree


def parse_rpoly(text: str) -> RPoly:
    """Parse and evaluate to a canonical element of R."""
    return parse_element(text).evaluate()
