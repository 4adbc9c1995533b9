"""Canonical compact strings.

Each component is written starting from its cycle.  A point with no
preimage outside the cycle is written bare; a run of single preimages
becomes a conveyor ``[..., y, x]`` whose first entry is expanded
recursively; several preimages become a splat ``[T1,...,Tk|x]``.
Components and splat entries are ordered by least contained point, and
each cycle starts at its least point.
"""

from __future__ import annotations

from .errors import NotCanonicalError
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
    format_ast,
)
from .parser import parse_compact
from .semantics import interpret
from .transformation import Transformation, TreeNode, decompose


def subtree_minima(roots) -> dict[int, int]:
    """Least point of the subtree under every node, keyed by node point."""
    order = list(roots)
    for node in order:
        order.extend(node.children)
    least: dict[int, int] = {}
    for node in reversed(order):
        least[node.point] = min([node.point] + [least[c.point] for c in node.children])
    return least


def _emit_tree(node: TreeNode, memo: dict[int, int]) -> Tree:
    if not node.children:
        return Point(node.point)
    if len(node.children) == 1:
        chain = [node.point]
        node = node.children[0]
        while len(node.children) == 1:
            chain.append(node.point)
            node = node.children[0]
        head = _emit_tree(node, memo)
        return Conveyor((head,) + tuple(Point(p) for p in reversed(chain)))
    kids = sorted(node.children, key=lambda c: memo[c.point])
    return Splat(tuple(_emit_tree(c, memo) for c in kids), node.point)


def canonical_ast(f: Transformation) -> CompactAst:
    comps = decompose(f).components
    memo = subtree_minima(t for c in comps for t in c.forests)
    items: list[Component] = []
    for comp in comps:
        if len(comp.cycle) == 1:
            node = comp.forests[0]
            if node.children:
                items.append(TopTree(_emit_tree(node, memo)))
        else:
            items.append(Cycle(tuple(_emit_tree(n, memo) for n in comp.forests)))
    return Components(tuple(items)) if items else Identity()


def canonical_form(f: Transformation) -> str:
    """The canonical compact string of ``f`` (no whitespace)."""
    return format_ast(canonical_ast(f))


def canonicalize(text: str) -> str:
    return canonical_form(interpret(parse_compact(text)))


def is_canonical(text: str) -> bool:
    return text == canonicalize(text)


def structural_idempotent(text: str) -> bool:
    """Idempotence read off a canonical string.

    True for ``()`` and for strings made only of two-point conveyors
    ``[x,y]`` and one-level splats ``[x1,...,xk|y]``.
    """
    if not is_canonical(text):
        raise NotCanonicalError(f"{text!r} is not in canonical form")
    ast = parse_compact(text, strict=True)
    if isinstance(ast, Identity):
        return True
    for comp in ast.items:
        if isinstance(comp, Cycle):
            return False
        tree = comp.tree
        if not all(isinstance(t, Point) for t in tree.trees):
            return False
        if isinstance(tree, Conveyor) and len(tree.trees) != 2:
            return False
    return True
