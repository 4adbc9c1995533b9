"""Total transformations of {1..n} and their functional digraphs.

A :class:`Transformation` is an immutable image table.  Points are 1-based
on every public surface.  Composition is left-to-right: ``compose(f, g)``
applies ``f`` first, then ``g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BoundExceededError,
    TransformationError,
    DegreeMismatchError,
    NotAPermutationError,
    PointOutOfRangeError,
)

#: largest degree accepted by :func:`are_conjugate` (searches all of S_n)
MAX_CONJUGACY_DEGREE = 8
#: largest degree accepted by :func:`conjugacy_class_representatives` (n^n maps)
MAX_CLASS_DEGREE = 5


@dataclass(frozen=True)
class Transformation:
    """A total map ``f: {1..n} -> {1..n}``; ``images[i - 1] == f(i)``."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        table = tuple(map(int, images))
        n = len(table)
        if table and (min(table) < 1 or max(table) > n):
            i, v = next((i, v) for i, v in enumerate(table, 1) if not 1 <= v <= n)
            raise PointOutOfRangeError(f"image f({i}) = {v} outside 1..{n}")
        object.__setattr__(self, "images", table)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return apply(self, x)

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Transformation) -> Transformation:
        # f * g reads left to right, like the factorization products
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"


class OrbitIndices(NamedTuple):
    """Least ``tail`` m and, for it, least ``period`` k with f^m(x) = f^(m+k)(x)."""

    tail: int
    period: int


class TreeNode(NamedTuple):
    point: int
    children: tuple["TreeNode", ...]


@dataclass(frozen=True)
class Component:
    """One basin of attraction.

    ``cycle`` starts at its least point and follows ``f``.  ``forests[i]`` is
    the tree hanging into ``cycle[i]``: its root is the cycle point itself and
    its descendants are the non-cycle points draining into it.
    """

    cycle: tuple[int, ...]
    forests: tuple[TreeNode, ...]

    def points(self) -> list[int]:
        out: list[int] = []
        stack = list(self.forests)
        while stack:
            node = stack.pop()
            out.append(node.point)
            stack.extend(node.children)
        return sorted(out)


@dataclass(frozen=True)
class Decomposition:
    degree: int
    components: tuple[Component, ...]

    def to_transformation(self) -> Transformation:
        """Rebuild the map from cycles and forests."""
        images = [0] * self.degree
        for comp in self.components:
            k = len(comp.cycle)
            for i, c in enumerate(comp.cycle):
                images[c - 1] = comp.cycle[(i + 1) % k]
            stack = list(comp.forests)
            while stack:
                node = stack.pop()
                for child in node.children:
                    images[child.point - 1] = node.point
                    stack.append(child)
        return Transformation(images)


def identity(n: int) -> Transformation:
    return Transformation(range(1, n + 1))


def constant(n: int, target: int) -> Transformation:
    return Transformation([target] * n)


def _check_point(f: Transformation, x: int) -> None:
    if not 1 <= x <= f.degree:
        raise PointOutOfRangeError(f"point {x} outside 1..{f.degree}")


def _check_degrees(f: Transformation, g: Transformation) -> None:
    if f.degree != g.degree:
        raise DegreeMismatchError(f"degrees differ: {f.degree} != {g.degree}")


def apply(f: Transformation, x: int) -> int:
    _check_point(f, x)
    return f.images[x - 1]


def compose(f: Transformation, g: Transformation) -> Transformation:
    """``x -> g(f(x))``."""
    _check_degrees(f, g)
    gi = g.images
    return Transformation(gi[y - 1] for y in f.images)


def compose_all(maps: Sequence[Transformation], degree: int | None = None) -> Transformation:
    """Left-to-right product; the empty product needs an explicit ``degree``."""
    if not maps:
        if degree is None:
            raise ValueError("empty product needs a degree")
        return identity(degree)
    out = maps[0]
    for g in maps[1:]:
        out = compose(out, g)
    return out


def power(f: Transformation, e: int) -> Transformation:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = identity(f.degree)
    base = f
    # square-and-multiply; powers of f commute so order is irrelevant
    while e:
        if e & 1:
            result = compose(result, base)
        base = compose(base, base)
        e >>= 1
    return result


def inverse(s: Transformation) -> Transformation:
    if not is_permutation(s):
        raise NotAPermutationError(f"{s!r} is not a permutation")
    inv = [0] * s.degree
    for i, v in enumerate(s.images, 1):
        inv[v - 1] = i
    return Transformation(inv)


def orbit_indices(f: Transformation, x: int) -> OrbitIndices:
    _check_point(f, x)
    seen: dict[int, int] = {}
    step = 0
    while x not in seen:
        seen[x] = step
        x = f.images[x - 1]
        step += 1
    return OrbitIndices(seen[x], step - seen[x])


def preimages(f: Transformation, x: int) -> set[int]:
    _check_point(f, x)
    return {y for y, v in enumerate(f.images, 1) if v == x}


def preimage_table(f: Transformation) -> list[list[int]]:
    """``table[x]`` lists the preimages of ``x`` in increasing order (index 0 unused)."""
    table: list[list[int]] = [[] for _ in range(f.degree + 1)]
    for y, v in enumerate(f.images, 1):
        table[v].append(y)
    return table


def cycle_points(f: Transformation) -> set[int]:
    """Points lying on a cycle, found with one colouring walk per point."""
    state = [0] * (f.degree + 1)  # 0 unvisited, 1 on current walk, 2 finished
    on_cycle: set[int] = set()
    for start in range(1, f.degree + 1):
        path = []
        x = start
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = f.images[x - 1]
        if state[x] == 1:
            # closed a new cycle: everything from x onward on this walk
            on_cycle.update(path[path.index(x):])
        for y in path:
            state[y] = 2
    return on_cycle


def decompose(f: Transformation) -> Decomposition:
    pre = preimage_table(f)
    cyc = cycle_points(f)

    def grow(top: int) -> TreeNode:
        # iterative, so long trajectories do not hit the recursion limit
        order = [top]
        for x in order:
            order.extend(y for y in pre[x] if y not in cyc)
        built: dict[int, TreeNode] = {}
        for x in reversed(order):
            built[x] = TreeNode(x, tuple(built[y] for y in pre[x] if y not in cyc))
        return built[top]

    comps = []
    done: set[int] = set()
    for start in sorted(cyc):
        if start in done:
            continue
        cycle = [start]
        x = f.images[start - 1]
        while x != start:
            cycle.append(x)
            x = f.images[x - 1]
        done.update(cycle)
        comps.append(Component(tuple(cycle), tuple(grow(c) for c in cycle)))
    comps.sort(key=lambda c: c.points()[0])
    return Decomposition(f.degree, tuple(comps))


def is_permutation(f: Transformation) -> bool:
    return len(set(f.images)) == f.degree


def is_idempotent(f: Transformation) -> bool:
    return compose(f, f) == f


def conjugate(f: Transformation, s: Transformation) -> Transformation:
    """Relabel every edge ``(x, f(x))`` as ``(s(x), s(f(x)))``."""
    _check_degrees(f, s)
    if not is_permutation(s):
        raise NotAPermutationError(f"{s!r} is not a permutation")
    h = [0] * f.degree
    si = s.images
    for x, fx in enumerate(f.images, 1):
        h[si[x - 1] - 1] = si[fx - 1]
    return Transformation(h)


def permutations(n: int) -> Iterator[Transformation]:
    """All of S_n, in lexicographic order of image tables."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Transformation(p)


def all_transformations(n: int) -> Iterator[Transformation]:
    """All of T_n, in lexicographic order of image tables."""
    for t in itertools.product(range(1, n + 1), repeat=n):
        yield Transformation(t)


def _shape_signature(f: Transformation) -> tuple:
    # conjugation invariant; cheap filter before the S_n search
    pre = preimage_table(f)
    return tuple(sorted((len(pre[x]), orbit_indices(f, x)) for x in range(1, f.degree + 1)))


def are_conjugate(f: Transformation, g: Transformation) -> bool:
    """Brute-force search for ``s`` with ``conjugate(f, s) == g``.

    Raises :class:`BoundExceededError` above degree ``MAX_CONJUGACY_DEGREE``.
    """
    _check_degrees(f, g)
    if f.degree > MAX_CONJUGACY_DEGREE:
        raise BoundExceededError(
            f"conjugacy search limited to degree {MAX_CONJUGACY_DEGREE}, got {f.degree}"
        )
    if _shape_signature(f) != _shape_signature(g):
        return False
    return any(conjugate(f, s) == g for s in permutations(f.degree))


def conjugacy_classes(n: int) -> list[list[Transformation]]:
    """Partition T_n into S_n-conjugacy orbits (orbits listed by first member found)."""
    if n > MAX_CLASS_DEGREE:
        raise BoundExceededError(f"class enumeration limited to degree {MAX_CLASS_DEGREE}, got {n}")
    if n < 0:
        raise TransformationError("degree must be non-negative")
    perms = list(permutations(n))
    seen: set[Transformation] = set()
    classes = []
    for f in all_transformations(n):
        if f in seen:
            continue
        orbit = {conjugate(f, s) for s in perms}
        seen |= orbit
        classes.append(sorted(orbit, key=lambda t: t.images))
    return classes


def conjugacy_class_representatives(n: int) -> list[Transformation]:
    """One map per conjugacy class of T_n, for ``n <= MAX_CLASS_DEGREE``.

    Each class is represented by the member whose canonical compact string
    is lexicographically least; the result is sorted by that string.
    """
    from .canonical import canonical_form

    reps = [min(orbit, key=canonical_form) for orbit in conjugacy_classes(n)]
    reps.sort(key=canonical_form)
    return reps
