"""Tokenizer for the bracket notations (compact, linear, factorization)."""

from __future__ import annotations

import enum
import re
from typing import NamedTuple

from .errors import ParseError, SourceSpan

#: points must fit in a signed 32-bit integer
MAX_POINT = 2**31 - 1


class TokenKind(enum.Enum):
    LBRACKET = "["
    RBRACKET = "]"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    BAR = "|"
    SEMI = ";"
    POINT = "point"
    EOF = "end of input"


class Token(NamedTuple):
    kind: TokenKind
    span: SourceSpan
    value: int | None = None

    def describe(self) -> str:
        if self.kind is TokenKind.POINT:
            return f"point {self.value}"
        if self.kind is TokenKind.EOF:
            return "end of input"
        return repr(self.kind.value)


COMPACT_SYMBOLS = frozenset("[]()|,")
LINEAR_SYMBOLS = frozenset("[]();,")

_BY_CHAR = {k.value: k for k in TokenKind if len(k.value) == 1}
_SCAN = re.compile(r"(?P<space>\s+)|(?P<digits>[0-9]+)|(?P<other>.)", re.DOTALL)


def tokenize(text: str, symbols: frozenset[str] = COMPACT_SYMBOLS) -> list[Token]:
    """Split ``text`` into tokens, skipping whitespace.

    The result always ends with an EOF token whose span is empty and sits
    at ``len(text)``.
    """
    tokens: list[Token] = []
    for m in _SCAN.finditer(text):
        kind = m.lastgroup
        if kind == "space":
            continue
        span = SourceSpan(m.start(), m.end())
        lexeme = m.group()
        if kind == "other":
            if lexeme not in symbols:
                raise ParseError(f"unexpected character {lexeme!r}", span)
            tokens.append(Token(_BY_CHAR[lexeme], span))
            continue
        if lexeme[0] == "0":
            raise ParseError(f"malformed point {lexeme!r}: points are positive, without leading zeros", span)
        # compare lengths first so huge literals are never converted
        if len(lexeme) > len(str(MAX_POINT)) or int(lexeme) > MAX_POINT:
            raise ParseError(f"point {lexeme} exceeds {MAX_POINT}", span)
        tokens.append(Token(TokenKind.POINT, span, int(lexeme)))
    tokens.append(Token(TokenKind.EOF, SourceSpan(len(text), len(text))))
    return tokens
