"""Recursive-descent parser for polynomial expressions in x and y over Q.

Grammar (whitespace is ignored between tokens)::

    expr    := term (('+' | '-') term)*
    term    := ('+' | '-')? product
    product := power (('*' | '/' | <juxtaposition>) power)*
    power   := atom ('^' INTEGER)?
    atom    := 'x' | 'y' | INTEGER | '(' expr ')'

Juxtaposition binds like '*', so ``5x^2 + 6xy`` parses as written.  A
divisor must evaluate to a nonzero rational constant.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import QQ
from .errors import UsageError
from .poly import BiPoly

__all__ = ["ParseError", "parse_poly", "MAX_EXPONENT"]

MAX_EXPONENT = 1000


class ParseError(UsageError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
            elif ch in "xy+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", self._bytes(i))
        self.pos = 0

    def _bytes(self, i: int) -> int:
        return len(self.text[:i].encode())

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def offset(self) -> int:
        if self.pos < len(self.tokens):
            return self._bytes(self.tokens[self.pos][2])
        return len(self.text.encode())

    def take(self, kind: str):
        if self.peek() != kind:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", self.offset())
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> BiPoly:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}", self.offset())
        return out

    def expr(self) -> BiPoly:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> BiPoly:
        if self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            val = self.product()
            return -val if op == "-" else val
        return self.product()

    def product(self) -> BiPoly:
        out = self.power()
        while True:
            kind = self.peek()
            if kind == "*":
                self.take("*")
                out = out * self.power()
            elif kind == "/":
                self.take("/")
                at = self.offset()
                d = self.power()
                if not d.is_constant():
                    raise ParseError("division by a non-constant", at)
                if d.is_zero():
                    raise ParseError("division by zero", at)
                out = out.scale(1 / d.terms[(0, 0)])
            elif kind in ("x", "y", "int", "("):
                out = out * self.power()
            else:
                return out

    def power(self) -> BiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            at = self.offset()
            _, digits, _ = self.take("int")
            n = int(digits)
            if n > MAX_EXPONENT:
                raise ParseError(f"exponent {n} exceeds {MAX_EXPONENT}", at)
            base = base ** n
        return base

    def atom(self) -> BiPoly:
        kind = self.peek()
        if kind == "x":
            self.take("x")
            return BiPoly.x()
        if kind == "y":
            self.take("y")
            return BiPoly.y()
        if kind == "int":
            _, digits, _ = self.take("int")
            return BiPoly.constant(Fraction(int(digits)), QQ)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        found = kind or "end of input"
        raise ParseError(f"expected 'x', 'y', an integer or '(', found {found!r}", self.offset())


def parse_poly(text: str) -> BiPoly:
    """Parse ``text`` into an exact polynomial over Q.

    >>> str(parse_poly("5x^2+6xy+5y^2-10y"))
    '5*x^2 + 6*x*y + 5*y^2 - 10*y'
    """
    return _Parser(text).parse()
