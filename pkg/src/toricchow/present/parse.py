"""Parser for relation expressions such as ``(x4+2*y1)*(x4+6*y1)``.

Grammar (whitespace ignored, relations separated by commas or newlines)::

    relation := expr
    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := ("+" | "-") unary | power
    power    := atom ("^" INT)?
    atom     := INT | NAME | "(" expr ")"

There is no implicit multiplication: ``2x`` is a syntax error.
"""
from __future__ import annotations

import re
from typing import Sequence

from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


_TOKEN = re.compile(r"[ \t\r]*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),\n;]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if not rest.strip(" \t\r"):
                break
            bad = pos + len(rest) - len(rest.lstrip(" \t\r"))
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        val = m.group(kind)
        out.append((kind, val, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.index = {n: i for i, n in enumerate(names)}
        self.n = len(names)
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def relations(self) -> list[tuple[Polynomial, int]]:
        out = []
        while True:
            while self.peek()[1] in (",", "\n", ";"):
                self.take()
            if self.peek()[0] == "end":
                return out
            start = self.peek()[2]
            out.append((self.expr(), start))
            tok = self.peek()
            if tok[0] != "end" and tok[1] not in (",", "\n", ";"):
                raise self.error(f"unexpected {tok[1]!r}")

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        p = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("expected a positive integer exponent", tok)
            k = int(tok[1])
            if k < 1:
                raise self.error("exponent must be positive", tok)
            p = p ** k
        return p

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return Polynomial.constant(self.n, int(val))
        if kind == "name":
            if val not in self.index:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
            return Polynomial.var(self.n, self.index[val])
        if val == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_relations(text: str, names: Sequence[str]) -> list[Polynomial]:
    """Parse, expand and check relations over the variables ``names``.

    Every relation must be homogeneous of positive degree (all variables
    have degree 1). Zero relations are kept; callers may drop them.
    """
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {list(names)}")
    parser = _Parser(text, names)
    out = []
    for p, pos in parser.relations():
        if not p.is_homogeneous():
            raise ParseError("inhomogeneous relation", pos, text)
        if p.degree() == 0:
            raise ParseError("nonzero constant relation", pos, text)
        out.append(p)
    return out


def variable_names(text: str) -> list[str]:
    """Identifiers in ``text`` in order of first appearance."""
    seen = []
    for kind, val, _ in _tokenize(text):
        if kind == "name" and val not in seen:
            seen.append(val)
    return seen
