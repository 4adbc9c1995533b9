"""Parse trees for the compact notation.

Grammar (whitespace allowed between any two tokens)::

    expr      = "()" | component+
    component = "(" tree ("," tree)+ ")" | ntree
    ntree     = "[" tree ("," tree)* "|" point "]"      splat
              | "[" tree ("," tree)+ "]"                conveyor
    tree      = ntree | point
    point     = positive decimal integer, no leading zeros

Every point occurs at most once in an expression.  A splat needs at least
two trees before the bar in strict mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union


@dataclass(frozen=True)
class Point:
    point: int


@dataclass(frozen=True)
class Conveyor:
    trees: tuple["Tree", ...]


@dataclass(frozen=True)
class Splat:
    trees: tuple["Tree", ...]
    target: int


Tree = Union[Point, Conveyor, Splat]


@dataclass(frozen=True)
class Cycle:
    trees: tuple[Tree, ...]


@dataclass(frozen=True)
class TopTree:
    tree: Union[Conveyor, Splat]


Component = Union[Cycle, TopTree]


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Components:
    items: tuple[Component, ...]


CompactAst = Union[Identity, Components]


def root(tree: Tree) -> int:
    while isinstance(tree, Conveyor):
        tree = tree.trees[-1]
    if isinstance(tree, Splat):
        return tree.target
    return tree.point


def _tree_points(tree: Tree) -> Iterator[int]:
    if isinstance(tree, Point):
        yield tree.point
        return
    for t in tree.trees:
        yield from _tree_points(t)
    if isinstance(tree, Splat):
        yield tree.target


def iter_points(node) -> Iterator[int]:
    """Points in order of appearance in the written expression."""
    if isinstance(node, Identity):
        return
    if isinstance(node, Components):
        for c in node.items:
            yield from iter_points(c)
    elif isinstance(node, Cycle):
        for t in node.trees:
            yield from _tree_points(t)
    elif isinstance(node, TopTree):
        yield from _tree_points(node.tree)
    else:
        yield from _tree_points(node)


def mentioned_points(ast) -> list[int]:
    return list(iter_points(ast))


def max_point(ast) -> int:
    return max(iter_points(ast), default=0)


def least_point(node) -> int:
    return min(iter_points(node))


def format_tree(tree: Tree, bar: str = "|") -> str:
    if isinstance(tree, Point):
        return str(tree.point)
    inner = ",".join(format_tree(t, bar) for t in tree.trees)
    if isinstance(tree, Splat):
        return f"[{inner}{bar}{tree.target}]"
    return f"[{inner}]"


def format_ast(ast: CompactAst, bar: str = "|") -> str:
    """Render without whitespace; ``parse_compact`` inverts this exactly."""
    if isinstance(ast, Identity):
        return "()"
    parts = []
    for c in ast.items:
        if isinstance(c, Cycle):
            parts.append("(" + ",".join(format_tree(t, bar) for t in c.trees) + ")")
        else:
            parts.append(format_tree(c.tree, bar))
    return "".join(parts)


def _map_tree(tree: Tree, fn: Callable[[int], int]) -> Tree:
    if isinstance(tree, Point):
        return Point(fn(tree.point))
    trees = tuple(_map_tree(t, fn) for t in tree.trees)
    if isinstance(tree, Splat):
        return Splat(trees, fn(tree.target))
    return Conveyor(trees)


def relabel(ast: CompactAst, fn: Callable[[int], int]) -> CompactAst:
    """Replace every point ``p`` by ``fn(p)``, keeping the shape."""
    if isinstance(ast, Identity):
        return ast
    items: list[Component] = []
    for c in ast.items:
        if isinstance(c, Cycle):
            items.append(Cycle(tuple(_map_tree(t, fn) for t in c.trees)))
        else:
            items.append(TopTree(_map_tree(c.tree, fn)))
    return Components(tuple(items))
