"""Reading and writing polynomials as plain text.

Grammar (whitespace is ignored)::

    expr    := ['-'] term (('+' | '-') term)*
    term    := coeff ('*' varpow)* | varpow ('*' varpow)*
    coeff   := integer | integer '/' positive-integer
    varpow  := var ('^' positive-integer)?

Variables are the labels of the target :class:`~cubicinv.arith.VarSpace`
(``x, y, z, w`` for the primal space, ``y1..y4`` for the dual space).  The
leading sign is an extension so that printed polynomials always re-parse.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import PRIMAL, SparsePoly, VarSpace, as_rational


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, space: VarSpace):
        self.tokens = _tokenize(text)
        self.i = 0
        self.space = space

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected '{op}', found {val or 'end of input'!r}", pos)

    def positive_int(self) -> int:
        kind, val, pos = self.take()
        if kind != "int" or int(val) == 0:
            raise ParseError(f"expected a positive integer, found {val or 'end of input'!r}", pos)
        return int(val)

    def varpow(self, exp: list[int]):
        kind, val, pos = self.take()
        if kind != "name":
            raise ParseError(f"expected a variable, found {val or 'end of input'!r}", pos)
        if val not in self.space.labels:
            raise ParseError(f"unknown variable {val!r}", pos)
        k = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            k = self.positive_int()
        exp[self.space.index(val)] += k

    def term(self) -> tuple[tuple[int, ...], Fraction]:
        exp = [0] * self.space.arity
        kind, val, pos = self.peek()
        coeff = Fraction(1)
        if kind == "int":
            self.take()
            coeff = Fraction(int(val))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                coeff /= self.positive_int()
            while self.peek()[:2] == ("op", "*"):
                self.take()
                self.varpow(exp)
        elif kind == "name":
            self.varpow(exp)
            while self.peek()[:2] == ("op", "*"):
                self.take()
                self.varpow(exp)
        else:
            raise ParseError(f"expected a term, found {val or 'end of input'!r}", pos)
        return tuple(exp), coeff

    def expr(self) -> SparsePoly:
        terms: dict[tuple[int, ...], Fraction] = {}
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        while True:
            exp, c = self.term()
            terms[exp] = terms.get(exp, 0) + sign * c
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = 1 if val == "+" else -1
                continue
            raise ParseError(f"unexpected {val!r}", pos)
        return SparsePoly(self.space, terms)


def parse_poly(text: str, space: VarSpace = PRIMAL) -> SparsePoly:
    """Parse ``text`` into a polynomial over ``space``; raises :class:`ParseError`."""
    return _Parser(text, space).expr()


def _format_monomial(exp, labels) -> str:
    parts = []
    for label, k in zip(labels, exp):
        if k == 1:
            parts.append(label)
        elif k > 1:
            parts.append(f"{label}^{k}")
    return "*".join(parts)


def format_rational(c) -> str:
    c = Fraction(as_rational(c))
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: SparsePoly) -> str:
    """Canonical text in descending graded-lex order; re-parses to ``p``."""
    if p.is_zero():
        return "0"
    out = []
    for exp, c in p.items():
        mono = _format_monomial(exp, p.space.labels)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
