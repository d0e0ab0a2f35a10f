"""Parsers for ring specs and Laurent-polynomial expressions.

Ring specs::

    F<p> | Z/<n> | Z/<p>^<k> | Q | Q[e]/e^<v> | F<p>[e]/e^<v>

Series expressions (``e`` is the nilpotent generator, ``t`` the variable)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT ("/" INT)? | "e" | "t" | "(" expr ")"

There is no general division: ``p/q`` is only a rational literal.  Negative
exponents are allowed on anything that evaluates to a unit times a power of
``t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit, ParseError, SymbolNotInRing, UnsupportedRing
from .laurent import LaurentSeries
from .rings import (
    Ring,
    integers_mod_prime_power,
    prime_field,
    prime_power_decomposition,
    rationals,
    truncated_algebra,
)

# ---------------------------------------------------------------------------
# ring specs

_RING_RE = re.compile(
    r"""^(?:
        F(?P<fp>\d+)(?:\[e\]/e\^(?P<fv>\d+))?
      | Z/(?P<zn>\d+)(?:\^(?P<zk>\d+))?
      | Q(?:\[e\]/e\^(?P<qv>\d+))?
    )$""",
    re.VERBOSE,
)


def parse_ring_spec(s: str) -> Ring:
    """Ring described by ``s``, e.g. ``"F7"``, ``"Z/9"``, ``"Q[e]/e^3"``."""
    text = "".join(s.split())
    m = _RING_RE.match(text)
    if m is None:
        raise ParseError(f"malformed ring spec {s!r}", _first_bad_position(text), s)
    if m.group("fp") is not None:
        base = prime_field(int(m.group("fp")))
        nu = m.group("fv")
        return base if nu is None else truncated_algebra(base, _nu(nu, s))
    if m.group("zn") is not None:
        n = int(m.group("zn"))
        if m.group("zk") is not None:
            k = int(m.group("zk"))
            decomposition = prime_power_decomposition(n)
            if decomposition is None or decomposition[1] != 1 or k < 1:
                raise UnsupportedRing(f"Z/{n}^{k} is not a local ring of the form Z/p^k")
            return integers_mod_prime_power(n, k)
        decomposition = prime_power_decomposition(n)
        if decomposition is None:
            raise UnsupportedRing(f"Z/{n} is not a local ring: {n} is not a prime power")
        return integers_mod_prime_power(*decomposition)
    nu = m.group("qv")
    return rationals() if nu is None else truncated_algebra(rationals(), _nu(nu, s))


def _nu(text: str, spec: str) -> int:
    nu = int(text)
    if nu < 1:
        raise UnsupportedRing(f"nilpotency index must be at least 1 in {spec!r}")
    return nu


def _first_bad_position(text: str) -> int:
    """Length of the longest prefix of ``text`` that some valid spec starts with."""
    probes = ("F7[e]/e^2", "Z/9^2", "Q[e]/e^2")
    best = 0
    for probe in probes:
        i = 0
        while i < len(text) and i < len(probe):
            same = text[i] == probe[i] or (text[i].isdigit() and probe[i].isdigit())
            if not same:
                break
            i += 1
        # digits may run longer than in the probe
        while i < len(text) and text[i].isdigit():
            i += 1
        best = max(best, i)
    return best


# ---------------------------------------------------------------------------
# expression syntax tree


class SeriesAst:
    """Base class of expression nodes; :meth:`evaluate` yields an exact series."""

    pos: int

    def evaluate(self, ring: Ring) -> LaurentSeries:
        raise NotImplementedError


@dataclass(frozen=True)
class Literal(SeriesAst):
    num: int
    den: int
    pos: int

    def evaluate(self, ring):
        try:
            return LaurentSeries.constant(ring, Fraction(self.num, self.den))
        except NotAUnit as exc:
            raise ParseError(f"{self.num}/{self.den} is not defined in {ring}: {exc}", self.pos) from exc


@dataclass(frozen=True)
class Epsilon(SeriesAst):
    pos: int

    def evaluate(self, ring):
        if not ring.has_nilpotent_generator:
            raise SymbolNotInRing(f"'e' (at position {self.pos}) is not an element of {ring}")
        return LaurentSeries.from_payloads(ring, {0: ring.eps})


@dataclass(frozen=True)
class Variable(SeriesAst):
    pos: int

    def evaluate(self, ring):
        return LaurentSeries.t(ring)


@dataclass(frozen=True)
class Negate(SeriesAst):
    operand: SeriesAst
    pos: int

    def evaluate(self, ring):
        return -self.operand.evaluate(ring)


@dataclass(frozen=True)
class BinOp(SeriesAst):
    op: str
    left: SeriesAst
    right: SeriesAst
    pos: int

    def evaluate(self, ring):
        a = self.left.evaluate(ring)
        b = self.right.evaluate(ring)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        return a * b


@dataclass(frozen=True)
class Power(SeriesAst):
    base: SeriesAst
    exponent: int
    pos: int

    def evaluate(self, ring):
        b = self.base.evaluate(ring)
        if self.exponent >= 0:
            return b**self.exponent
        if len(b.coeffs) != 1 or not ring.is_unit(b.coeffs[0]):
            raise ParseError("negative exponents need a unit times a power of t", self.pos)
        inv = LaurentSeries(ring, -b.val, [ring.inv(b.coeffs[0])])
        return inv ** (-self.exponent)


# ---------------------------------------------------------------------------
# tokenizer and recursive-descent parser

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(s: str) -> list[_Token]:
    tokens = []
    i = 0
    while True:
        while i < len(s) and s[i].isspace():
            i += 1
        if i == len(s):
            tokens.append(_Token("end", "", i))
            return tokens
        m = _TOKEN_RE.match(s, i)
        if m is None:
            raise ParseError(f"unexpected character {s[i]!r}", i, s)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        i = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.pos, self.text)

    def accept(self, text: str) -> _Token | None:
        if self.tok.kind == "op" and self.tok.text == text:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        value = int(self.tok.text)
        self.i += 1
        return value

    def parse(self) -> SeriesAst:
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error("expected an operator or end of input")
        return node

    def expr(self) -> SeriesAst:
        node = self.term()
        while True:
            tok = self.accept("+") or self.accept("-")
            if tok is None:
                return node
            node = BinOp(tok.text, node, self.term(), tok.pos)

    def term(self) -> SeriesAst:
        node = self.unary()
        while True:
            tok = self.accept("*")
            if tok is None:
                return node
            node = BinOp("*", node, self.unary(), tok.pos)

    def unary(self) -> SeriesAst:
        tok = self.accept("-")
        if tok is not None:
            return Negate(self.unary(), tok.pos)
        if self.accept("+") is not None:
            return self.unary()
        return self.power()

    def power(self) -> SeriesAst:
        node = self.atom()
        tok = self.accept("^")
        if tok is None:
            return node
        sign = -1 if self.accept("-") else 1
        return Power(node, sign * self.expect_int(), tok.pos)

    def atom(self) -> SeriesAst:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            num, den = int(tok.text), 1
            if self.accept("/"):
                den_tok = self.tok
                den = self.expect_int()
                if den == 0:
                    raise ParseError("zero denominator", den_tok.pos, self.text)
            return Literal(num, den, tok.pos)
        if tok.kind == "name":
            self.i += 1
            if tok.text == "t":
                return Variable(tok.pos)
            if tok.text == "e":
                return Epsilon(tok.pos)
            raise ParseError(f"unknown symbol {tok.text!r}; only 't' and 'e' are allowed", tok.pos, self.text)
        if self.accept("("):
            node = self.expr()
            if self.accept(")") is None:
                raise self.error("expected ')'")
            return node
        raise self.error("expected a number, 't', 'e' or '('")


def parse_expression(s: str) -> SeriesAst:
    """Syntax tree for ``s``; independent of any ring."""
    return _Parser(s).parse()


def parse_series(s: str, ring: Ring) -> LaurentSeries:
    """The exact Laurent polynomial denoted by ``s`` over ``ring``."""
    return parse_expression(s).evaluate(ring)
