"""Recursive-descent parser for matrix-entry expressions.

Grammar (whitespace insignificant)::

    expr   := ['-'] term { ('+'|'-') term }
    term   := factor { '*' factor }
    factor := base ['^' INT]
    base   := INT | IDENT | '(' expr ')'

``INT`` is a nonnegative decimal literal and ``IDENT`` follows the variable
grammar of :class:`~seprkit.polyring.VariableTable`.  Identifiers are declared
on first use by appending them to the caller's table.  Implicit
multiplication ("2a1") is rejected; ``^`` takes only a nonnegative integer
literal, with ``^0`` yielding 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polyring import Polynomial, VariableTable

__all__ = ["ParseError", "parse_entry"]


class ParseError(ValueError):
    """Syntax error with the byte offset of the offending input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "ident" | one of + - * ^ ( ) | "end"
    text: str
    offset: int


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()])")


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    pos = 0
    length = len(src)
    while pos < length:
        if src[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        if match.group(1) is not None:
            tokens.append(_Token("int", match.group(1), pos))
        elif match.group(2) is not None:
            tokens.append(_Token("ident", match.group(2), pos))
        else:
            tokens.append(_Token(match.group(3), match.group(3), pos))
        pos = match.end()
    tokens.append(_Token("end", "", length))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], table: VariableTable):
        self.tokens = tokens
        self.pos = 0
        self.table = table

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.current
        self.pos += 1
        return token

    def expect(self, kind: str) -> _Token:
        if self.current.kind != kind:
            raise ParseError(f"expected {kind!r}, found {self.current.text or 'end of input'!r}",
                             self.current.offset)
        return self.advance()

    def parse_expr(self) -> Polynomial:
        negate = False
        if self.current.kind == "-":
            self.advance()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            term = self.parse_term()
            result = result + term if op == "+" else result - term
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.current.kind == "*":
            self.advance()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        if self.current.kind == "^":
            self.advance()
            exponent = self.expect("int")
            return base ** int(exponent.text)
        return base

    def parse_base(self) -> Polynomial:
        token = self.current
        if token.kind == "int":
            self.advance()
            return Polynomial.constant(self.table, int(token.text))
        if token.kind == "ident":
            self.advance()
            return Polynomial.variable(self.table, token.text)
        if token.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"expected a value, found {token.text or 'end of input'!r}", token.offset)


def parse_entry(src: str, table: VariableTable) -> Polynomial:
    """Parse one entry expression into a canonical polynomial over ``table``.

    Any identifier not already in the table is appended to it.  Raises
    :class:`ParseError` (with offset) on malformed input, including empty
    input and trailing garbage.
    """
    tokens = _tokenize(src)
    if tokens[0].kind == "end":
        raise ParseError("empty input", 0)
    parser = _Parser(tokens, table)
    result = parser.parse_expr()
    if parser.current.kind != "end":
        raise ParseError(f"unexpected trailing input {parser.current.text!r}",
                         parser.current.offset)
    return result
