"""Interpretation of compact-notation parse trees as transformations.

Each expression denotes a set of pairs ``p -> q``.  Points never given an
image are fixed, which makes the result total.
"""

from __future__ import annotations

from .errors import TransformationError
from .nodes import (
    CompactAst,
    Component,
    Identity,
    Point,
    Splat,
    TopTree,
    Tree,
    max_point,
    root,
)
from .parser import parse_compact
from .transformation import Transformation, identity

PairSet = dict[int, int]


def _add(pairs: PairSet, p: int, q: int) -> None:
    # point uniqueness upstream guarantees this never trips
    assert p not in pairs, f"point {p} given two images"
    pairs[p] = q


def _merge(into: PairSet, other: PairSet) -> None:
    for p, q in other.items():
        _add(into, p, q)


def interpret_tree(tree: Tree) -> PairSet:
    if isinstance(tree, Point):
        return {}
    pairs: PairSet = {}
    for t in tree.trees:
        _merge(pairs, interpret_tree(t))
    roots = [root(t) for t in tree.trees]
    if isinstance(tree, Splat):
        for r in roots:
            _add(pairs, r, tree.target)
    else:
        for a, b in zip(roots, roots[1:]):
            _add(pairs, a, b)
    return pairs


def interpret_component(comp: Component) -> PairSet:
    if isinstance(comp, TopTree):
        return interpret_tree(comp.tree)
    pairs: PairSet = {}
    for t in comp.trees:
        _merge(pairs, interpret_tree(t))
    roots = [root(t) for t in comp.trees]
    for a, b in zip(roots, roots[1:] + roots[:1]):
        _add(pairs, a, b)
    return pairs


def interpret(ast: CompactAst, degree: int | None = None) -> Transformation:
    """Total transformation on ``{1..degree}`` denoted by ``ast``.

    ``degree`` defaults to the largest mentioned point (0 for ``()``).
    """
    need = max_point(ast)
    if degree is None:
        degree = need
    elif degree < 0:
        raise TransformationError(f"negative degree {degree}")
    elif degree < need:
        raise TransformationError(f"degree {degree} is below the largest point {need}")
    if isinstance(ast, Identity):
        return identity(degree)
    pairs: PairSet = {}
    for comp in ast.items:
        _merge(pairs, interpret_component(comp))
    return Transformation(pairs.get(p, p) for p in range(1, degree + 1))


def evaluate(text: str, degree: int | None = None) -> Transformation:
    """Parse and interpret a compact expression in one step."""
    return interpret(parse_compact(text), degree)
