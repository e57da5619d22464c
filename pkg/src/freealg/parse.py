"""Text grammar for polynomials, group-algebra elements and K[u1, u2].

::

    expr    := [sign] term (sign term)*
    term    := factor (['*'] factor)*          juxtaposition is concatenation
    factor  := primary ['^' ['-'] INT]         '-' only in group mode
    primary := INT ['/' INT] | variable | '(' expr ')'

Variables are single lowercase letters (``u1``/``u2`` in ``upoly`` mode).
Whitespace is ignored and the Unicode minus sign is accepted for ``-``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bimodule import UPoly2
from .core import ALPHABET, NcPoly
from .series import GroupAlgElem


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int, expected: str | None = None):
        self.text = text
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(f"{detail}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>u[12]|[A-Za-z])|(?P<op>[-+*/^()]))")

MODES = ("monoid", "group", "upoly")


class _Parser:
    def __init__(self, text: str, mode: str, alphabet: str):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.text = text
        self.mode = mode
        self.alphabet = alphabet
        self.tokens = self._tokenize(text.replace("−", "-"))
        self.i = 0
        self.cls = {"monoid": NcPoly, "group": GroupAlgElem, "upoly": UPoly2}[mode]

    def _tokenize(self, text: str):
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                stripped = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[stripped]!r}", self.text, stripped)
            kind = m.lastgroup
            start = m.start(kind)
            value = m.group(kind)
            if kind == "var" and self.mode != "upoly" and value.startswith("u") and len(value) == 2:
                # 'u1' outside upoly mode is the letter u followed by a coefficient
                tokens.append(("var", "u", start))
                tokens.append(("int", value[1], start + 1))
            else:
                tokens.append((kind, value, start))
            pos = m.end()
        tokens.append(("end", "", len(text)))
        return tokens

    # token helpers
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected: str | None = None):
        _, value, pos = self.peek()
        raise ParseError(message, self.text, pos, expected)

    def expect_op(self, op: str):
        kind, value, _ = self.peek()
        if kind != "op" or value != op:
            self.fail(f"unexpected {value or 'end of input'!r}", repr(op))
        self.take()

    # grammar
    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression", "a term")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}", "'+', '-' or end of input")
        return value

    def expr(self):
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        total = self.term() * sign
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                t = self.term()
                total = total + t if value == "+" else total - t
            else:
                return total

    def _starts_factor(self) -> bool:
        kind, value, _ = self.peek()
        return kind in ("int", "var") or (kind == "op" and value == "(")

    def term(self):
        if not self._starts_factor():
            self.fail(f"unexpected {self.peek()[1] or 'end of input'!r}", "a number, variable or '('")
        value = self.factor()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok == "*":
                self.take()
                if not self._starts_factor():
                    self.fail("dangling '*'", "a number, variable or '('")
                value = value * self.factor()
            elif self._starts_factor():
                value = value * self.factor()
            else:
                return value

    def factor(self):
        base = self.primary()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            negative = False
            kind, value, pos = self.peek()
            if kind == "op" and value == "-":
                if self.mode != "group":
                    self.fail("negative exponent outside group mode", "a nonnegative integer")
                self.take()
                negative = True
            kind, value, pos = self.peek()
            if kind != "int":
                self.fail(f"unexpected {value or 'end of input'!r}", "an integer exponent")
            self.take()
            e = int(value)
            if negative:
                try:
                    base = base.inverse()
                except ValueError:
                    raise ParseError("only a single term can be inverted", self.text, pos) from None
            base = base ** e
        return base

    def primary(self):
        kind, value, pos = self.take()
        if kind == "int":
            c = Fraction(int(value))
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "int":
                    raise ParseError(f"unexpected {dv or 'end of input'!r}", self.text, dpos, "a denominator")
                if int(dv) == 0:
                    raise ParseError("zero denominator", self.text, dpos)
                c = c / int(dv)
            return self.cls.constant(c)
        if kind == "var":
            return self._variable(value, pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.i -= 1
        self.fail(f"unexpected {value or 'end of input'!r}", "a number, variable or '('")

    def _variable(self, name: str, pos: int):
        if self.mode == "upoly":
            if name == "u1":
                return UPoly2.u1()
            if name == "u2":
                return UPoly2.u2()
            raise ParseError(f"unknown variable {name!r}", self.text, pos, "'u1' or 'u2'")
        if name not in self.alphabet or len(name) != 1:
            raise ParseError(f"unknown letter {name!r}", self.text, pos, "a lowercase letter")
        return self.cls.word(name)


def parse_poly(text: str, mode: str = "monoid", alphabet: str = ALPHABET):
    """Parse ``text`` as an :class:`NcPoly` (``monoid``), :class:`GroupAlgElem`
    (``group``) or :class:`UPoly2` (``upoly``)."""
    return _Parser(text, mode, alphabet).parse()


def parse_word(text: str, alphabet: str = ALPHABET) -> str:
    """Parse a monomial with coefficient 1, e.g. ``"(xy)^2x" -> "xyxyx"``."""
    p = parse_poly(text, "monoid", alphabet)
    if not p.is_monomial() or next(iter(p.items()))[1] != 1:
        raise ValueError(f"{text!r} is not a single word")
    return next(iter(p.support()))


def parse_upoly(text: str) -> UPoly2:
    return parse_poly(text, "upoly")


def format_poly(p) -> str:
    """Canonical text: terms in descending order, reduced coefficients, signs folded in."""
    return str(p)
