"""Parsing of series literals, sequence specs and Riordan pair specs.

Series literals are either a comma-separated list of rationals
(``1,3/2,0,-7``) or an expression in ``x`` built from integers, rationals,
``+ - * / ^``, parentheses, implicit multiplication (``2x``) and
``sqrt(...)`` for series with constant term 1, e.g. ``x/(1-x-x^2)``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .btransform import transform_gathered
from .powerseries import Series, default_order, div, sqrt1
from .riordan import Riordan
from .sequences import (Seq, catalan_seq, delta_seq, fibonacci_seq, from_gf, from_list,
                        gen_r_seq, jacobsthal_seq)


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(x)|(sqrt)|(\*\*|[-+*/^()]))")
# extra working order so that cancelling powers of x in a division keeps the requested order
_GUARD = 8


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        tok = m.group(m.lastindex)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], order: int):
        self.toks = tokens
        self.i = 0
        self.order = order

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Series:
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return value

    def expr(self) -> Series:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Series:
        value = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                rhs = self.unary()
                value = value * rhs if tok == "*" else _divide(value, rhs)
            elif tok is not None and (tok in ("x", "(", "sqrt") or tok[0].isdigit()):
                value = value * self.power()
            else:
                return value

    def unary(self) -> Series:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Series:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer, got {tok!r}")
            exp = sign * int(tok)
            if exp < 0:
                return _divide(Series.constant(1, self.order), base ** (-exp))
            return base ** exp
        return base

    def atom(self) -> Series:
        tok = self.take()
        if tok == "x":
            return Series.x(self.order)
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok == "sqrt":
            self.take("(")
            value = self.expr()
            self.take(")")
            return sqrt1(value)
        if tok[0].isdigit():
            return Series.constant(Fraction(tok), self.order)
        raise ParseError(f"unexpected token {tok!r}")


def _divide(a: Series, b: Series) -> Series:
    """Series quotient that first cancels a common power of ``x``."""
    vb = b.valuation()
    if vb is None:
        raise ZeroDivisionError("division by the zero series")
    if vb == 0:
        return div(a, b)
    va = a.valuation()
    if va is not None and va < vb:
        raise ParseError("quotient is not a power series (pole at x = 0)")
    return div(a.shift_down(vb), b.shift_down(vb))


def parse_series(text: str, order: int | None = None) -> Series:
    """Parse a coefficient list or a rational expression in ``x``."""
    order = default_order() if order is None else order
    text = text.strip()
    if "," in text:
        try:
            values = [Fraction(v.strip()) for v in text.split(",") if v.strip()]
        except ValueError as exc:
            raise ParseError(f"bad coefficient list {text!r}: {exc}") from None
        return Series(values, len(values))
    value = _Parser(_tokenize(text), order + _GUARD).parse()
    return value.truncate(min(order, value.order))


def parse_riordan(text: str, order: int | None = None) -> Riordan:
    """Parse ``g=<expr>; f=<expr>``."""
    parts = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, sep, value = chunk.partition("=")
        if not sep or key.strip() not in ("g", "f"):
            raise ParseError(f"expected 'g=...; f=...', got {text!r}")
        parts[key.strip()] = parse_series(value, order)
    if set(parts) != {"g", "f"}:
        raise ParseError("a Riordan pair needs both g and f")
    return Riordan(parts["g"], parts["f"])


def parse_seq(spec: str, length: int | None = None) -> Seq:
    """Sequence spec: ``fib``, ``jac``, ``catalan``, ``delta``, ``genr:<r>``,
    ``list:1,2,3``, ``gf:<expr>`` or ``btransform:<spec>``."""
    length = default_order() if length is None else length
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    if head == "fib":
        return fibonacci_seq(length)
    if head == "jac":
        return jacobsthal_seq(length)
    if head == "catalan":
        return catalan_seq(length)
    if head == "delta":
        return delta_seq(length)
    if head == "genr":
        try:
            r = int(rest)
        except ValueError:
            raise ParseError(f"genr needs an integer parameter, got {rest!r}") from None
        return gen_r_seq(r, length)
    if head == "list":
        return from_list(parse_series(rest + ",").coeffs, "list")
    if head == "gf":
        return from_gf(parse_series(rest, length), "gf")
    if head == "btransform":
        inner = parse_seq(rest, length + 1)
        n = min(length, len(inner) - 1)
        return from_list(transform_gathered(inner, n), f"btransform:{inner.name}")
    raise ParseError(f"unknown sequence spec {spec!r}")
