"""Tokenizer and recursive-descent parser for the polynomial text syntax.

Grammar (``*`` may be omitted between adjacent factors)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := ('+' | '-') factor | atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

Division is only allowed by nonzero constants.  The same tokenizer feeds the
CLI line parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import PolySyntaxError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*\??)
  | (?P<op>->|\*\*|[-+*/^()<>\[\]{},:=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            tokens.append(Token(kind, "^" if tok == "**" else tok, line, pos + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, len(text) + 1))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, *texts) -> bool:
        t = self.peek
        return t.kind == "op" and t.text in texts or t.kind == "ident" and t.text in texts

    def error(self, message, expected=()):
        t = self.peek
        found = "end of line" if t.kind == "eof" else repr(t.text)
        raise PolySyntaxError(f"{message}, found {found}", t.line, t.column, expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}", (text,))
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.peek.kind != kind:
            self.error(f"expected {what}", (what,))
        return self.next()


_ATOM_START = ("<number>", "<variable>", "(", "-", "+")


class PolyParser:
    """Parses polynomial expressions from a shared token stream."""

    def __init__(self, stream: TokenStream, ring, allow_div: bool = True):
        # allow_div=False leaves '/' to the caller, for fractions a / b
        self.s = stream
        self.ring = ring
        self.allow_div = allow_div

    def _operand_follows(self, op: Token):
        s = self.s
        if s.peek.kind in ("num", "ident") or s.at("(", "-", "+"):
            return
        raise PolySyntaxError(f"dangling {op.text!r}: expected an operand after it", op.line, op.column, _ATOM_START)

    def expr(self):
        s = self.s
        value = self.term()
        while s.at("+", "-"):
            op = s.next()
            self._operand_follows(op)
            rhs = self.term()
            value = value + rhs if op.text == "+" else value - rhs
        return value

    def term(self):
        s = self.s
        value = self.factor()
        while True:
            if s.at("*"):
                self._operand_follows(s.next())
                value = value * self.factor()
            elif s.at("/") and self.allow_div:
                tok = s.next()
                self._operand_follows(tok)
                d = self.factor()
                if not d.is_constant() or d.is_zero():
                    raise PolySyntaxError(
                        "division is only allowed by a nonzero constant", tok.line, tok.column
                    )
                value = value / d
            elif s.peek.kind in ("num", "ident") or s.at("("):
                if s.peek.kind == "ident" and not self.ring.has_var(s.peek.text):
                    break
                value = value * self.factor()
            else:
                return value
        return value

    def factor(self):
        s = self.s
        if s.at("-"):
            s.next()
            return -self.factor()
        if s.at("+"):
            s.next()
            return self.factor()
        base = self.atom()
        if s.at("^"):
            s.next()
            exp = s.expect_kind("num", "<exponent>")
            return base ** int(exp.text)
        return base

    def atom(self):
        s = self.s
        tok = s.peek
        if tok.kind == "num":
            s.next()
            return self.ring.const(int(tok.text))
        if tok.kind == "ident":
            if not self.ring.has_var(tok.text):
                raise PolySyntaxError(
                    f"unknown variable {tok.text!r} for ring {self.ring!r}",
                    tok.line,
                    tok.column,
                    ("<variable>",),
                )
            s.next()
            return self.ring.var(tok.text)
        if s.at("("):
            s.next()
            value = self.expr()
            s.expect(")")
            return value
        s.error("expected a polynomial operand", _ATOM_START)


def parse_poly(text: str, ring):
    stream = TokenStream(tokenize(text))
    value = PolyParser(stream, ring).expr()
    if stream.peek.kind != "eof":
        stream.error("unexpected trailing input", ("+", "-", "*", "/", "^", "<end>"))
    return value
