"""Recursive-descent parser for the compact notation.

The same machinery reads the older linear notation, whose trees are
``[T1,...,Tk;r]`` and which has no conveyor form; see ``dialect``.
"""

from __future__ import annotations

from .errors import (
    CycleTooShortError,
    DuplicatePointError,
    EmptyBracketsError,
    ParseError,
    SourceSpan,
    SplatTooShortError,
)
from .lexer import COMPACT_SYMBOLS, LINEAR_SYMBOLS, Token, TokenKind, tokenize
from .nodes import (
    CompactAst,
    Component,
    Components,
    Conveyor,
    Cycle,
    Identity,
    Point,
    Splat,
    TopTree,
    Tree,
)

K = TokenKind


class Parser:
    def __init__(self, text: str, *, strict: bool = False, dialect: str = "compact"):
        if dialect not in ("compact", "linear"):
            raise ValueError(f"unknown dialect {dialect!r}")
        self.text = text
        self.strict = strict
        self.linear = dialect == "linear"
        self.tokens = tokenize(text, LINEAR_SYMBOLS if self.linear else COMPACT_SYMBOLS)
        self.pos = 0
        self.seen: dict[int, SourceSpan] = {}

    # -- token stream -------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind is not K.EOF:
            self.pos += 1
        return tok

    def at(self, kind: TokenKind) -> bool:
        return self.peek().kind is kind

    def fail(self, message: str, *expected: str) -> ParseError:
        tok = self.peek()
        return ParseError(f"{message}, got {tok.describe()}", tok.span, frozenset(expected))

    def expect(self, kind: TokenKind, message: str) -> Token:
        if self.at(kind):
            return self.advance()
        raise self.fail(message, kind.value if kind is not K.POINT else "point")

    # -- grammar ------------------------------------------------------

    def parse(self) -> CompactAst:
        try:
            return self._expression()
        except RecursionError:
            tok = self.peek()
            raise ParseError("brackets nested too deeply", tok.span) from None

    def _expression(self) -> CompactAst:
        if self.at(K.LPAREN) and self.peek(1).kind is K.RPAREN and self.peek(2).kind is K.EOF:
            return Identity()
        if self.at(K.EOF):
            raise self.fail("empty expression", "(", "[")
        items: list[Component] = []
        while not self.at(K.EOF):
            items.append(self.component())
        return Components(tuple(items))

    def component(self) -> Component:
        tok = self.peek()
        if tok.kind is K.LPAREN:
            return self.cycle()
        if tok.kind is K.LBRACKET:
            return TopTree(self.ntree())
        if tok.kind is K.POINT:
            raise ParseError(
                f"a component cannot be a bare point ({tok.value}); fixed points are not written",
                tok.span,
                frozenset({"(", "["}),
            )
        raise self.fail("expected a component", "(", "[")

    def cycle(self) -> Cycle:
        start = self.advance().span.start
        if self.at(K.RPAREN):
            end = self.advance().span.end
            raise EmptyBracketsError('"()" denotes the identity only as the whole expression', SourceSpan(start, end))
        trees = [self.tree()]
        while self.at(K.COMMA):
            self.advance()
            trees.append(self.tree())
        close = self.expect(K.RPAREN, "expected ',' or ')' in cycle")
        if len(trees) < 2:
            raise CycleTooShortError(
                "a cycle needs at least two entries", SourceSpan(start, close.span.end)
            )
        return Cycle(tuple(trees))

    def tree(self) -> Tree:
        tok = self.peek()
        if tok.kind is K.POINT:
            return Point(self.point())
        if tok.kind is K.LBRACKET:
            return self.ntree()
        raise self.fail("expected a point or '['", "point", "[")

    def ntree(self) -> Tree:
        start = self.advance().span.start
        if self.at(K.RBRACKET):
            end = self.advance().span.end
            raise EmptyBracketsError('"[]" is not a tree', SourceSpan(start, end))
        trees = [self.tree()]
        while self.at(K.COMMA):
            self.advance()
            trees.append(self.tree())
        bar = K.SEMI if self.linear else K.BAR
        if self.at(bar):
            bar_tok = self.advance()
            target = self.point()
            self.expect(K.RBRACKET, "expected ']' after splat target")
            if self.strict and len(trees) < 2:
                raise SplatTooShortError("strict mode needs two or more trees before '|'", bar_tok.span)
            return Splat(tuple(trees), target)
        if self.linear:
            raise self.fail("expected ',' or ';' in tree", ",", ";")
        if self.at(K.RBRACKET):
            close = self.advance()
            if len(trees) < 2:
                raise ParseError(
                    "a bracket needs two or more trees or a '|' target",
                    SourceSpan(start, close.span.end),
                    frozenset({",", "|"}),
                )
            return Conveyor(tuple(trees))
        raise self.fail("expected ',', '|' or ']' in tree", ",", "|", "]")

    def point(self) -> int:
        tok = self.expect(K.POINT, "expected a point")
        assert tok.value is not None
        if tok.value in self.seen:
            raise DuplicatePointError(tok.value, self.seen[tok.value], tok.span)
        self.seen[tok.value] = tok.span
        return tok.value


def parse_compact(text: str, *, strict: bool = False) -> CompactAst:
    """Parse a compact-notation expression.

    Raises a :class:`~transnot.errors.ParseError` subclass carrying the
    span of the first problem found.
    """
    return Parser(text, strict=strict).parse()
