"""Exception hierarchy shared by every notation and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Half-open character range ``[start, end)`` into the source text."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")


class TransformationError(ValueError):
    """Invalid use of the transformation algebra."""


class PointOutOfRangeError(TransformationError):
    pass


class DegreeMismatchError(TransformationError):
    pass


class NotAPermutationError(TransformationError):
    pass


class BoundExceededError(TransformationError):
    """A brute-force routine was asked to run beyond its documented bound."""


class UnsupportedDialectError(ValueError):
    pass


class ParseError(ValueError):
    """A notation string was rejected.

    ``span`` locates the offending text; ``expected`` lists the token
    descriptions that would have been acceptable, when that is meaningful.
    """

    kind = "SyntaxError"

    def __init__(self, message: str, span: SourceSpan, expected: frozenset[str] = frozenset()):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = expected
        self.source: str | None = None

    def render(self, text: str | None = None) -> str:
        """Message followed by the source line and a caret marker."""
        if text is None:
            text = self.source or ""
        width = max(1, self.span.end - self.span.start)
        caret = " " * self.span.start + "^" * width
        head = f"{self.kind} at {self.span.start}: {self.message}"
        if self.expected:
            head += f" (expected {', '.join(sorted(self.expected))})"
        return f"{head}\n  {text}\n  {caret}"


class DuplicatePointError(ParseError):
    kind = "DuplicatePoint"

    def __init__(self, point: int, first: SourceSpan, second: SourceSpan):
        super().__init__(f"point {point} occurs more than once (first at {first.start})", second)
        self.point = point
        self.first = first


class CycleTooShortError(ParseError):
    kind = "CycleTooShort"


class EmptyBracketsError(ParseError):
    kind = "EmptyBrackets"


class SplatTooShortError(ParseError):
    kind = "SplatTooShort"


class NotCanonicalError(ValueError):
    pass
