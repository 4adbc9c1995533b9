"""Command-line interface: ``transnot <command> ...``.

Exit codes: 0 success, 1 selftest failure, 2 parse or validation error,
3 unsupported operation, 4 brute-force bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .canonical import canonical_form
from .corpus import run_corpus
from .errors import BoundExceededError, NotCanonicalError, ParseError, TransformationError, UnsupportedDialectError
from .legacy import Dialect, emit_dialect, parse_any, parse_dialect
from .nodes import format_ast, relabel
from .parser import parse_compact
from .semantics import interpret
from .transformation import (
    Transformation,
    TreeNode,
    compose_all,
    conjugacy_class_representatives,
    conjugate,
    decompose,
    is_idempotent,
    is_permutation,
    orbit_indices,
    power,
)

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_BOUND = 4

DIALECTS = [d.value for d in Dialect]
AUTO = "auto"
INPUTS = [AUTO] + DIALECTS


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _size_and_depth(node: TreeNode) -> tuple[int, int]:
    size, depth = 0, 0
    stack = [(c, 1) for c in node.children]
    while stack:
        n, d = stack.pop()
        size += 1
        depth = max(depth, d)
        stack.extend((c, d + 1) for c in n.children)
    return size, depth


def info_report(f: Transformation, orbits: bool = False) -> dict:
    comps = []
    for comp in decompose(f).components:
        sizes = [_size_and_depth(t) for t in comp.forests]
        comps.append(
            {
                "cycle": list(comp.cycle),
                "cycle_length": len(comp.cycle),
                "tree_sizes": [s for s, _ in sizes],
                "max_tree_depth": max(d for _, d in sizes),
            }
        )
    report = {
        "degree": f.degree,
        "images": list(f.images),
        "components": comps,
        "is_permutation": is_permutation(f),
        "is_idempotent": is_idempotent(f),
        "canonical": canonical_form(f),
    }
    if orbits:
        report["orbit_indices"] = [list(orbit_indices(f, x)) for x in range(1, f.degree + 1)]
    return report


def _print_report(report: dict) -> None:
    print(f"canonical: {report['canonical']}")
    print(f"degree: {report['degree']}")
    print(f"images: {' '.join(map(str, report['images']))}")
    print(f"permutation: {str(report['is_permutation']).lower()}")
    print(f"idempotent: {str(report['is_idempotent']).lower()}")
    print(f"components: {len(report['components'])}")
    for c in report["components"]:
        cyc = ",".join(map(str, c["cycle"]))
        print(
            f"  cycle ({cyc}) length {c['cycle_length']}"
            f" trees {c['tree_sizes']} depth {c['max_tree_depth']}"
        )
    if "orbit_indices" in report:
        for x, (m, k) in enumerate(report["orbit_indices"], 1):
            print(f"  {x}: m={m} k={k}")


def _read_as(expr: str, dialect: str, degree: int | None) -> tuple[str, Transformation]:
    try:
        if dialect == AUTO:
            found, f = parse_any(expr, degree)
            return found.value, f
        return dialect, parse_dialect(expr, dialect, degree)
    except ParseError as exc:
        exc.source = expr
        raise


def _read(expr: str, dialect: str, degree: int | None) -> Transformation:
    return _read_as(expr, dialect, degree)[1]


def _read_common(exprs: Sequence[str], dialect: str, degree: int | None) -> list[tuple[str, Transformation]]:
    """Parse operands and pad them with fixed points to one shared degree."""
    read = [_read_as(e, dialect, degree) for e in exprs]
    top = max([degree or 0] + [f.degree for _, f in read])
    return [(d, f) if f.degree == top else _read_as(e, d, top) for (d, f), e in zip(read, exprs)]


def _emit(f: Transformation, args) -> None:
    if args.json:
        print(json.dumps({"degree": f.degree, "images": list(f.images), "result": emit_dialect(f, args.to)}))
    else:
        print(emit_dialect(f, args.to))


# -- commands -----------------------------------------------------------


def cmd_parse(args) -> int:
    f = _read(args.expr, args.dialect, args.degree)
    report = info_report(f, orbits=args.orbits)
    if args.json:
        print(json.dumps(report))
    else:
        _print_report(report)
    return EXIT_OK


def cmd_canon(args) -> int:
    if args.exprs:
        lines = list(args.exprs)
    else:
        lines = sys.stdin.read().splitlines()
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            f = _read(line, args.dialect, None)
        except ParseError as exc:
            print(f"line {lineno}: {exc.render(line)}", file=sys.stderr)
            status = EXIT_INVALID
            if not args.keep_going:
                return status
            continue
        print(canonical_form(f))
    return status


def cmd_convert(args) -> int:
    f = _read(args.expr, args.source, args.degree)
    print(emit_dialect(f, args.target))
    return EXIT_OK


def cmd_compose(args) -> int:
    maps = [f for _, f in _read_common(args.exprs, args.dialect, args.degree)]
    _emit(compose_all(maps), args)
    return EXIT_OK


def cmd_power(args) -> int:
    if args.exponent < 0:
        raise CommandError("exponent must be non-negative", EXIT_INVALID)
    _emit(power(_read(args.expr, args.dialect, args.degree), args.exponent), args)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    (found, f), (_, s) = _read_common([args.expr, args.perm], args.dialect, args.degree)
    h = conjugate(f, s)
    if args.canonical or found != Dialect.COMPACT.value:
        text = canonical_form(h)
    else:
        # relabel the expression as written; the result must denote h
        text = format_ast(relabel(parse_compact(args.expr), s))
        assert interpret(parse_compact(text), h.degree) == h
    if args.json:
        print(json.dumps({"degree": h.degree, "images": list(h.images), "result": text}))
    else:
        print(text)
    return EXIT_OK


def cmd_classes(args) -> int:
    reps = [canonical_form(r) for r in conjugacy_class_representatives(args.n)]
    if args.json:
        print(json.dumps({"degree": args.n, "count": len(reps), "representatives": reps}))
    else:
        for r in reps:
            print(r)
        print(f"{len(reps)} classes", file=sys.stderr)
    return EXIT_OK


def random_transformations(n: int, count: int, seed: int) -> list[Transformation]:
    """Uniform maps on n points, reproducible from ``seed``.

    Uses ``random.Random(seed)`` (Mersenne Twister) and draws each image as
    ``randrange(n) + 1`` for points 1..n in order, map after map.
    """
    rng = random.Random(seed)
    return [Transformation(rng.randrange(n) + 1 for _ in range(n)) for _ in range(count)]


def cmd_random(args) -> int:
    if args.n < 1 or args.count < 0:
        raise CommandError("need n >= 1 and count >= 0", EXIT_INVALID)
    for f in random_transformations(args.n, args.count, args.seed):
        _emit(f, args)
    return EXIT_OK


def cmd_selftest(args) -> int:
    failed = 0
    for name, ok, detail in run_corpus():
        failed += not ok
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        print(line + (f" ({detail})" if detail else ""))
    print(f"{failed} failure(s)")
    return EXIT_SELFTEST if failed else EXIT_OK


# -- argument parsing ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="transnot", description="Compact notation for finite transformations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    def dialect_opts(sp: argparse.ArgumentParser, output: bool = False) -> None:
        sp.add_argument("--dialect", default=AUTO, choices=INPUTS, help="input notation (default: detect)")
        sp.add_argument("--degree", type=int, help="pad with fixed points up to this degree")
        if output:
            sp.add_argument("--to", default="compact", choices=DIALECTS, help="output notation")

    sp = add("parse", cmd_parse, "parse an expression and describe the transformation")
    sp.add_argument("expr")
    sp.add_argument("--orbits", action="store_true", help="include (m, k) for every point")
    dialect_opts(sp)

    sp = add("canon", cmd_canon, "canonical compact form (arguments, or stdin lines)")
    sp.add_argument("exprs", nargs="*")
    sp.add_argument("--dialect", default=AUTO, choices=INPUTS)
    sp.add_argument("--keep-going", action="store_true", help="continue past failing lines")

    sp = add("convert", cmd_convert, "convert between notations")
    sp.add_argument("expr")
    sp.add_argument("--from", dest="source", default=AUTO, choices=INPUTS)
    sp.add_argument("--to", dest="target", required=True, choices=DIALECTS)
    sp.add_argument("--degree", type=int)

    sp = add("compose", cmd_compose, "left-to-right product (first operand applied first)")
    sp.add_argument("exprs", nargs="+")
    dialect_opts(sp, output=True)

    sp = add("power", cmd_power, "e-fold self-composition")
    sp.add_argument("expr")
    sp.add_argument("exponent", type=int)
    dialect_opts(sp, output=True)

    sp = add("conjugate", cmd_conjugate, "relabel a transformation by a permutation")
    sp.add_argument("expr")
    sp.add_argument("perm")
    sp.add_argument("--canonical", action="store_true", help="print the canonical form instead of the relabelled input")
    dialect_opts(sp)

    sp = add("classes", cmd_classes, "conjugacy class representatives of T_n (n <= 5)")
    sp.add_argument("n", type=int)

    sp = add("random", cmd_random, "uniform random transformations")
    sp.add_argument("n", type=int)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--to", default="compact", choices=DIALECTS)

    add("selftest", cmd_selftest, "check every string of the golden corpus")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(exc.render(), file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedDialectError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BoundExceededError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (TransformationError, NotCanonicalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
