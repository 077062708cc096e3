"""Text syntax for quantum-set elements.

Grammar (whitespace ignored)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational '*' wedge | rational | wedge
    wedge    := factor ('^' factor)*
    factor   := '1' | 'e' digits | '{' expr (',' expr)* '}' | '(' expr ')'
    rational := int ['/' int]

``{a, b}`` is ``iota(a) ^ iota(b)``; ``e7`` is the basis set with serial 7.  A
bare rational is that multiple of the vacuum ``1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, RankGuard
from .grassmann import ONE, Element, iota, wedge, wedge_all
from .hfs import serial_decode


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class SerialRef:
    serial: int


@dataclass(frozen=True)
class Assoc:
    items: tuple["Node", ...]


@dataclass(frozen=True)
class Wedge:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[Fraction, "Node"], ...]


@dataclass(frozen=True)
class Paren:
    inner: "Node"


Node = Union[EmptySet, SerialRef, Assoc, Wedge, Sum, Paren]

_TOKEN = re.compile(r"\s*(?:(?P<serial>e\d+)|(?P<int>\d+)|(?P<op>[-+*/^{},()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", _byte(text, bad), text)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def at(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t[0] == "op" and t[1] == value

    def offset(self) -> int:
        t = self.peek()
        return _byte(self.text, t[2] if t else len(self.text))

    def fail(self, msg: str):
        raise ParseError(msg, self.offset(), self.text)

    def expect(self, value: str) -> None:
        if not self.at(value):
            t = self.peek()
            self.fail(f"expected {value!r}, found {t[1]!r}" if t else f"expected {value!r}, found end")
        self.i += 1

    def expr(self) -> Node:
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.peek()[1] == "-" else 1
            self.i += 1
        terms = [self.term(sign)]
        while self.at("+") or self.at("-"):
            sign = -1 if self.peek()[1] == "-" else 1
            self.i += 1
            terms.append(self.term(sign))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self, sign: int) -> tuple[Fraction, Node]:
        t = self.peek()
        if t is not None and t[0] == "int":
            literal = t[1]
            self.i += 1
            value = Fraction(int(literal))
            if self.at("/"):
                self.i += 1
                den = self.peek()
                if den is None or den[0] != "int":
                    self.fail("expected denominator")
                if int(den[1]) == 0:
                    self.fail("zero denominator")
                self.i += 1
                value /= int(den[1])
                literal = None
            if self.at("*"):
                self.i += 1
                return sign * value, self.wedge()
            if self.at("^"):
                if literal != "1":
                    self.fail("'^' after a coefficient; use '*'")
                return sign, self.wedge(first=EmptySet())
            return sign * value, EmptySet()
        return sign, self.wedge()

    def wedge(self, first: Node | None = None) -> Node:
        factors = [first if first is not None else self.factor()]
        while self.at("^"):
            self.i += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Wedge(tuple(factors))

    def factor(self) -> Node:
        t = self.peek()
        if t is None:
            self.fail("unexpected end of input")
        kind, value, _ = t
        if kind == "int":
            if value != "1":
                self.fail(f"bare integer {value} is not a factor")
            self.i += 1
            return EmptySet()
        if kind == "serial":
            self.i += 1
            return SerialRef(int(value[1:]))
        if value == "{":
            self.i += 1
            items = [self.expr()]
            while self.at(","):
                self.i += 1
                items.append(self.expr())
            self.expect("}")
            return Assoc(tuple(items))
        if value == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        self.fail(f"unexpected {value!r}")


def _byte(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


def parse(text: str) -> Node:
    """Parse ``text`` into an AST; raises :class:`ParseError` with a byte offset."""
    p = _Parser(text)
    if not p.toks:
        raise ParseError("empty expression", 0, text)
    node = p.expr()
    if p.peek() is not None:
        p.fail(f"unexpected {p.peek()[1]!r}")
    return node


def evaluate(node: Node, max_rank: int | None = None) -> Element:
    out = _eval(node)
    if max_rank is not None and out.max_rank() > max_rank:
        raise RankGuard(f"result has rank {out.max_rank()} above guard {max_rank}")
    return out


def _eval(node: Node) -> Element:
    if isinstance(node, EmptySet):
        return ONE
    if isinstance(node, SerialRef):
        return Element.basis(serial_decode(node.serial))
    if isinstance(node, Assoc):
        return wedge_all(iota(_eval(x)) for x in node.items)
    if isinstance(node, Wedge):
        acc = _eval(node.factors[0])
        for f in node.factors[1:]:
            acc = wedge(acc, _eval(f))
        return acc
    if isinstance(node, Sum):
        acc = Element()
        for c, t in node.terms:
            acc = acc + _eval(t) * c
        return acc
    if isinstance(node, Paren):
        return _eval(node.inner)
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, max_rank: int | None = None) -> Element:
    return evaluate(parse(text), max_rank)


def _rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_canonical(a: Element) -> str:
    """Deterministic text with terms by descending serial; inverse of :func:`parse`."""
    items = a.items()
    if not items:
        return "0"
    out = []
    for k, (m, c) in enumerate(items):
        mag = abs(c)
        if not m.children:
            body = _rational(mag)
        elif mag == 1:
            body = m.braces()
        else:
            body = f"{_rational(mag)}*{m.braces()}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
