"""Older notations for transformations, and conversion between dialects.

* image list (second row of the two-row form): ``2 1 2 3 3``
* linear notation: ``([[4,5;3];2],1)``, trees as ``[preimages;root]``
* path notation, emission only: ``(1,2)(4,3,2>(5,3,2>``
* factorization notation: ``[4,3,2,1|2][5,3|3]``, a left-to-right product
  of single-trajectory maps
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .canonical import canonical_form, subtree_minima
from .errors import ParseError, SourceSpan, UnsupportedDialectError
from .lexer import TokenKind, tokenize
from .nodes import CompactAst, Component, Components, Cycle, Identity, Point, Splat, TopTree, Tree, format_ast
from .parser import Parser, parse_compact
from .semantics import interpret
from .transformation import (
    Transformation,
    TreeNode,
    cycle_points,
    decompose,
    preimage_table,
)


class Dialect(str, enum.Enum):
    COMPACT = "compact"
    LINEAR = "linear"
    IMAGE_LIST = "imagelist"
    PATH = "path"
    FACTOR = "factor"


# -- image list ---------------------------------------------------------

_ENTRY = re.compile(r"[^\s,]+")


def parse_image_list(text: str) -> Transformation:
    """Read ``f(1) f(2) ... f(n)``; commas and whitespace both separate."""
    entries = list(_ENTRY.finditer(text))
    if not entries:
        raise ParseError("empty image list", SourceSpan(0, len(text)))
    n = len(entries)
    images = []
    for m in entries:
        span = SourceSpan(m.start(), m.end())
        tok = m.group()
        if not tok.isdigit() or tok[0] == "0":
            raise ParseError(f"malformed entry {tok!r}", span)
        v = int(tok)
        if v > n:
            raise ParseError(f"image {v} outside 1..{n}", span)
        images.append(v)
    return Transformation(images)


def emit_image_list(f: Transformation) -> str:
    return " ".join(map(str, f.images))


# -- linear notation ----------------------------------------------------


def parse_linear_ast(text: str) -> CompactAst:
    """Linear trees ``[T1,...,Tk;r]`` come back as compact splats."""
    return Parser(text, dialect="linear").parse()


def parse_linear(text: str, degree: int | None = None) -> Transformation:
    return interpret(parse_linear_ast(text), degree)


def _linear_tree(node: TreeNode, least: dict[int, int]) -> Tree:
    if not node.children:
        return Point(node.point)
    kids = sorted(node.children, key=lambda c: least[c.point])
    return Splat(tuple(_linear_tree(c, least) for c in kids), node.point)


def linear_ast(f: Transformation) -> CompactAst:
    comps = decompose(f).components
    least = subtree_minima(t for c in comps for t in c.forests)
    items: list[Component] = []
    for comp in comps:
        if len(comp.cycle) > 1:
            items.append(Cycle(tuple(_linear_tree(n, least) for n in comp.forests)))
        elif comp.forests[0].children:
            items.append(TopTree(_linear_tree(comp.forests[0], least)))
    return Components(tuple(items)) if items else Identity()


def emit_linear(f: Transformation) -> str:
    return format_ast(linear_ast(f), bar=";")


# -- path notation ------------------------------------------------------


def emit_path(f: Transformation) -> str:
    """Nontrivial cycles, then one ``(leaf,...,c>`` trajectory per leaf.

    Each trajectory runs from a point without preimages up to and
    including the first cycle point it reaches; shared suffixes repeat.
    """
    parts = []
    for comp in decompose(f).components:
        if len(comp.cycle) > 1:
            parts.append("(" + ",".join(map(str, comp.cycle)) + ")")
    on_cycle = cycle_points(f)
    pre = preimage_table(f)
    for x in range(1, f.degree + 1):
        if x in on_cycle or pre[x]:
            continue
        walk = [x]
        while walk[-1] not in on_cycle:
            walk.append(f.images[walk[-1] - 1])
        parts.append("(" + ",".join(map(str, walk)) + ">")
    return "".join(parts) or "()"


# -- factorization notation ---------------------------------------------


@dataclass(frozen=True)
class Factor:
    """``path[i] -> path[i+1]``, ``path[-1] -> connect``, all else fixed."""

    path: tuple[int, ...]
    connect: int

    def __post_init__(self) -> None:
        if not self.path:
            raise ValueError("empty factor")
        if len(set(self.path)) != len(self.path):
            raise ValueError(f"repeated point in factor {self.path}")
        if self.connect not in self.path:
            raise ValueError(f"connect point {self.connect} not on path {self.path}")

    def to_transformation(self, degree: int) -> Transformation:
        images = list(range(1, degree + 1))
        nxt = self.path[1:] + (self.connect,)
        for a, b in zip(self.path, nxt):
            images[a - 1] = b
        return Transformation(images)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.path)) + f"|{self.connect}]"


def render_factorization(factors: list[Factor]) -> str:
    return "".join(map(str, factors)) or "()"


def parse_factor_list(text: str) -> list[Factor]:
    toks = tokenize(text)
    K = TokenKind
    if [t.kind for t in toks] == [K.LPAREN, K.RPAREN, K.EOF]:
        return []
    pos = 0

    def take(kind: TokenKind, what: str):
        nonlocal pos
        tok = toks[pos]
        if tok.kind is not kind:
            raise ParseError(f"expected {what}, got {tok.describe()}", tok.span, frozenset({what}))
        pos += 1
        return tok

    factors = []
    if toks[0].kind is K.EOF:
        raise ParseError("empty factorization", toks[0].span, frozenset({"["}))
    while toks[pos].kind is not K.EOF:
        take(K.LBRACKET, "[")
        path = [take(K.POINT, "point")]
        while toks[pos].kind is K.COMMA:
            pos += 1
            path.append(take(K.POINT, "point"))
        take(K.BAR, "|")
        connect = take(K.POINT, "point")
        take(K.RBRACKET, "]")
        values = [t.value for t in path]
        for i, t in enumerate(path):
            if t.value in values[:i]:
                raise ParseError(f"point {t.value} repeated within a factor", t.span)
        if connect.value not in values:
            raise ParseError(f"connect point {connect.value} is not on the factor's path", connect.span)
        factors.append(Factor(tuple(values), connect.value))
    return factors


def parse_factorization(text: str, degree: int | None = None) -> Transformation:
    factors = parse_factor_list(text)
    need = max((max(fa.path) for fa in factors), default=0)
    if degree is None:
        degree = need
    elif degree < need:
        raise ParseError(f"degree {degree} is below the largest point {need}", SourceSpan(0, len(text)))
    images = list(range(1, degree + 1))
    for fa in factors:
        # left-to-right product: later factors act on the current images
        step = dict(zip(fa.path, fa.path[1:] + (fa.connect,)))
        images = [step.get(v, v) for v in images]
    return Transformation(images)


def emit_factorization(f: Transformation) -> list[Factor]:
    """Greedy factorization whose left-to-right product is ``f``.

    Trajectories start from the least leaf still unrealized, then from the
    least unrealized point once no leaves remain (pure cycles).  A
    trajectory stops when it meets a point already on it, or a point whose
    edge is already realized; the latter closes the factor on itself.
    """
    n = f.degree
    pre = preimage_table(f)
    realized = [False] + [f.images[x - 1] == x for x in range(1, n + 1)]
    leaves = [x for x in range(1, n + 1) if not pre[x]]
    factors = []

    def next_start() -> int | None:
        for x in leaves:
            if not realized[x]:
                return x
        for x in range(1, n + 1):
            if not realized[x]:
                return x
        return None

    while (x := next_start()) is not None:
        path = [x]
        while True:
            y = f.images[path[-1] - 1]
            if y in path:
                connect = y
                break
            path.append(y)
            if realized[y]:
                connect = y
                break
        for p in path:
            realized[p] = True
        factors.append(Factor(tuple(path), connect))
    return factors


# -- dialect dispatch ---------------------------------------------------


def parse_dialect(text: str, dialect: Dialect | str, degree: int | None = None) -> Transformation:
    dialect = Dialect(dialect)
    if dialect is Dialect.COMPACT:
        return interpret(parse_compact(text), degree)
    if dialect is Dialect.LINEAR:
        return parse_linear(text, degree)
    if dialect is Dialect.FACTOR:
        return parse_factorization(text, degree)
    if dialect is Dialect.IMAGE_LIST:
        f = parse_image_list(text)
        if degree is not None and degree != f.degree:
            if degree < f.degree:
                raise ParseError(f"image list has {f.degree} entries, more than degree {degree}", SourceSpan(0, len(text)))
            f = Transformation(f.images + tuple(range(f.degree + 1, degree + 1)))
        return f
    raise UnsupportedDialectError("path notation can be emitted but not parsed")


def parse_any(text: str, degree: int | None = None) -> tuple[Dialect, Transformation]:
    """Parse ``text`` in whichever parseable dialect accepts it.

    The dialects never disagree: factor lists always repeat a point, linear
    trees need ``;``, image lists have no brackets, and strings accepted by
    both compact and linear readers are plain cycles with one meaning.
    """
    errors: dict[Dialect, ParseError] = {}
    for d in (Dialect.COMPACT, Dialect.LINEAR, Dialect.FACTOR, Dialect.IMAGE_LIST):
        try:
            return d, parse_dialect(text, d, degree)
        except ParseError as exc:
            errors[d] = exc
    if ";" in text:
        raise errors[Dialect.LINEAR]
    if not any(c in text for c in "[]()|"):
        raise errors[Dialect.IMAGE_LIST]
    raise errors[Dialect.COMPACT]


def emit_dialect(f: Transformation, dialect: Dialect | str) -> str:
    dialect = Dialect(dialect)
    if dialect is Dialect.COMPACT:
        return canonical_form(f)
    if dialect is Dialect.LINEAR:
        return emit_linear(f)
    if dialect is Dialect.FACTOR:
        return render_factorization(emit_factorization(f))
    if dialect is Dialect.IMAGE_LIST:
        return emit_image_list(f)
    return emit_path(f)


def convert(text: str, source: Dialect | str, target: Dialect | str, degree: int | None = None) -> str:
    return emit_dialect(parse_dialect(text, source, degree), target)

