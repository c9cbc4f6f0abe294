"""Recursive-descent parser for polynomial text.

Grammar (whitespace between tokens is ignored)::

    expr     := [sign] term (sign term)*
    sign     := '+' | '-'
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := nat ('/' nat)?
    nat      := [0-9]+
    var      := [A-Za-z_][A-Za-z0-9_]*

A leading sign is accepted so that printed polynomials parse back.
Multiplication is always explicit.
"""
from __future__ import annotations

import re

from gmpy2 import mpq

from ..errors import PolySyntaxError, UnknownVariable
from .poly import Poly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {expected}, found {found}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-" and self.peek()[0] != "end":
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            if "/" in tok[1]:
                raise PolySyntaxError("exponent must be a non-negative integer", self.text, tok[2])
            base = base ** int(tok[1])
        return base

    def base(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "num":
            self.take()
            num, _, den = tok[1].partition("/")
            if den and int(den) == 0:
                raise PolySyntaxError("zero denominator", self.text, tok[2])
            return self.ring.const(mpq(int(num), int(den)) if den else mpq(int(num)))
        if kind == "var":
            self.take()
            if tok[1] not in self.ring.variables:
                raise UnknownVariable(f"unknown variable {tok[1]!r} at position {tok[2]}")
            return self.ring.gen(tok[1])
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        found = "end of input" if kind == "end" else repr(tok[1])
        raise PolySyntaxError(f"expected a number, variable or '(', found {found}", self.text, tok[2])


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``text`` into a :class:`Poly` of ``ring``."""
    if not isinstance(text, str) or not text.strip():
        raise PolySyntaxError("empty polynomial", text if isinstance(text, str) else "", 0)
    try:
        text.encode("ascii")
    except UnicodeEncodeError:
        bad = next(i for i, ch in enumerate(text) if ord(ch) > 127)
        raise PolySyntaxError("non-ASCII character", text, bad) from None
    p = _Parser(text, ring)
    value = p.expr()
    p.take("end")
    return value
