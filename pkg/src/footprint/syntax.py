"""Text syntax for field elements and polynomials.

Grammar (whitespace is ignored)::

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ["^" INT]
    atom   := INT | "w" | VAR | "(" expr ")"
    VAR    := ("X" | "x") INT          # 1-based variable number

Integers are reduced modulo the characteristic and ``w`` is the class of the
generator in ``F_p[w]/(modulus)`` (extension fields only).  Coefficients that
are sums must be parenthesised inside a product, e.g. ``(w+1)*X1^2``; the
printer emits exactly that form, so printing then parsing is the identity.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import FieldSpec
from .polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([Xx])(\d+)|(w)|([-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + skipped]!r}", text, pos + skipped)
        start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(3)), start))
        elif m.group(4) is not None:
            tokens.append(("w", None, start))
        else:
            tokens.append((m.group(5), None, start))
        pos = m.end(0)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec, nvars: int):
        self.text = text
        self.field = field
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", self.text, tok[2])
        return result

    def expr(self) -> Polynomial:
        sign = None
        if self.peek()[0] in "+-":
            sign = self.take()[0]
        result = self.term()
        if sign == "-":
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            _, e, _ = self.take("int")
            base = base**e
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "int":
            return Polynomial.constant(self.field, self.nvars, value)
        if kind == "w":
            if self.field.extension_degree == 1:
                raise ParseError(f"'w' is undefined in the prime field F_{self.field.characteristic}", self.text, pos)
            return Polynomial.constant(self.field, self.nvars, self.field.generator())
        if kind == "var":
            if not 1 <= value <= self.nvars:
                raise ParseError(f"variable X{value} outside X1..X{self.nvars}", self.text, pos)
            return Polynomial.variable(self.field, self.nvars, value)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected {kind!r}", self.text, pos)


def max_variable(text: str) -> int:
    """Largest ``Xi`` index mentioned in ``text`` (0 if none)."""
    return max((v for kind, v, _ in _tokenize(text) if kind == "var"), default=0)


def parse_polynomial(text: str, field: FieldSpec, nvars: int | None = None) -> Polynomial:
    """Parse ``text``; ``nvars`` defaults to the largest variable index used."""
    if nvars is None:
        nvars = max(max_variable(text), 1)
    return _Parser(text, field, nvars).parse()


def parse_element(text: str, field: FieldSpec) -> int:
    """Encoded value of a constant expression such as ``2*w^2+1``."""
    poly = _Parser(text, field, 0).parse()
    return poly.raw_terms.get((), 0)


def parse_monomial(text: str, nvars: int, field: FieldSpec | None = None) -> tuple[int, ...]:
    """Parse a bare monomial like ``X1^2*X2`` (or ``1``)."""
    field = field or FieldSpec(2)
    poly = parse_polynomial(text, field, nvars)
    terms = poly.raw_terms
    if len(terms) != 1 or next(iter(terms.values())) != 1:
        raise ParseError(f"{text!r} is not a single monomial", text, 0)
    return next(iter(terms))
