"""Rendering and parsing of ring elements as polynomial-fraction strings.

Grammar (whitespace insignificant)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("-" | "+") factor | atom ("^" INT)?
    atom   := INT | "pi" | "(" expr ")"

Examples: ``pi^3 + 2*pi^4``, ``(1+pi)/(1-pi)``, ``-1/2*pi``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError, WeightHomError
from .field import Field, QQ
from .local import LocalElement
from .polynomial import Polynomial


def _coeff_str(F: Field, c) -> str:
    c = F.signed(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def render_polynomial(p: Polynomial, compact: bool = False) -> str:
    F = p.field
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        s = _coeff_str(F, c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        if k == 0:
            body = mag
        else:
            mono = "pi" if k == 1 else f"pi^{k}"
            body = mono if mag == "1" else f"{mag}*{mono}"
        terms.append((neg, body))
    if not terms:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (minus if neg else plus) + body
    return out


def render(a: LocalElement) -> str:
    """``pi^3 + 2*pi^4`` for polynomials, ``(1+pi)/(1-pi)`` for fractions."""
    if a.den.is_one():
        return render_polynomial(a.num)
    return f"({render_polynomial(a.num, True)})/({render_polynomial(a.den, True)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(pi)|(.))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, pi, other = m.groups()
        if num is not None:
            toks.append(("int", int(num)))
        elif pi is not None:
            toks.append(("pi", None))
        else:
            if other not in "+-*/^()":
                raise ParseError(f"unexpected character {other!r} in {text!r}")
            toks.append((other, None))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.F = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                try:
                    val = val / rhs
                except WeightHomError as exc:
                    raise ParseError(f"division in {self.text!r}: {exc}") from None
        return val

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        if self.peek() == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.take("int")[1]
            base = base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return LocalElement.constant(self.F, val)
        if kind == "pi":
            return LocalElement.pi_power(self.F, 1)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {kind!r} in {self.text!r}")


def parse(text: str, field: Field = QQ) -> LocalElement:
    p = _Parser(text, field)
    if not p.toks:
        raise ParseError("empty expression")
    val = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return val
