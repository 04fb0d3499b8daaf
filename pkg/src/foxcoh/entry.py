"""Parser and printer for matrix entry expressions.

Grammar::

    expr   := term {("+" | "-") term}
    term   := factor {"*" factor} ["/" uint]
    factor := uint | "sqrt3" | "sqrt5" | "sqrt15" | "i" | "j" | "k"
            | "(" expr ")" | "-" factor

Whitespace is ignored. Evaluation is exact in the quaternions over F.
"""

from __future__ import annotations

import re

from .errors import NonConstantExpressionError, ParseError
from .field import QI, QJ, QK, SQRT3, SQRT5, SQRT15, FieldElement, Quaternion

_CONSTANTS = {
    "sqrt3": Quaternion(SQRT3),
    "sqrt5": Quaternion(SQRT5),
    "sqrt15": Quaternion(SQRT15),
    "i": QI,
    "j": QJ,
    "k": QK,
}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif op in "+-*/()":
            tokens.append(("op", op, start))
        else:
            raise ParseError(f"unexpected character {op!r}", text, start)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.factor()
        if self.peek()[:2] == ("op", "/"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("expected unsigned integer after '/'", tok)
            if tok[1] == 0:
                raise self.error("division by zero", tok)
            value = value / tok[1]
        return value

    def factor(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Quaternion(FieldElement(val))
        if kind == "name":
            if val not in _CONSTANTS:
                raise NonConstantExpressionError(
                    f"unknown symbol {val!r}", self.text, tok[2]
                )
            return _CONSTANTS[val]
        if (kind, val) == ("op", "-"):
            return -self.factor()
        if (kind, val) == ("op", "("):
            value = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return value
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected token {val!r}", tok)


def parse_entry(text: str) -> Quaternion:
    """Evaluate an entry expression such as ``"(-1 - i*sqrt3)/2"``."""
    return _Parser(text).parse()


def parse_field(text: str) -> FieldElement:
    q = parse_entry(text)
    if not (q.x.is_zero() and q.y.is_zero() and q.z.is_zero()):
        raise ParseError("expected a real (field) expression", text, 0)
    return q.w


_FIELD_NAMES = ("", "sqrt3", "sqrt5", "sqrt15")
_UNIT_NAMES = ("", "i", "j", "k")


def _format_terms(terms):
    out = []
    for coeff, monomial in terms:
        if coeff == 0:
            continue
        p, q = abs(coeff.numerator), coeff.denominator
        names = [m for m in monomial if m]
        if not names:
            body = str(p)
        elif p == 1:
            body = "*".join(names)
        else:
            body = "*".join([str(p)] + names)
        if q != 1:
            body += f"/{q}"
        if not out:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append((" - " if coeff < 0 else " + ") + body)
    return "".join(out) or "0"


def format_field(a: FieldElement) -> str:
    return _format_terms(zip(a.coords, ((n,) for n in _FIELD_NAMES)))


def format_quaternion(q: Quaternion) -> str:
    """Canonical literal; ``parse_entry(format_quaternion(q)) == q``."""
    terms = []
    for unit, part in zip(_UNIT_NAMES, q.parts):
        for name, c in zip(_FIELD_NAMES, part.coords):
            terms.append((c, (name, unit)))
    return _format_terms(terms)

