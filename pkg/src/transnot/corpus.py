"""Every notation string from the original write-up, with its known meaning.

``run_corpus`` checks all of them and is what ``transnot selftest`` runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .canonical import canonical_form, canonicalize, structural_idempotent
from .legacy import emit_factorization, emit_path, parse_factorization, parse_image_list, parse_linear, render_factorization
from .semantics import evaluate
from .transformation import (
    Transformation,
    are_conjugate,
    conjugacy_class_representatives,
    conjugate,
    decompose,
    is_idempotent,
)

FIG1 = "[[[1,3|2],5|4],6] ([[7,8|9],10],11,[14,13,12])(16,17)"
FIG1_IMAGES = (2, 4, 2, 6, 4, 6, 9, 9, 10, 11, 12, 10, 12, 13, 15, 17, 16)

FIG3 = "([[8,9|5],6,7|1],[4,3,2])"
FIG3_IMAGES = (2, 1, 2, 3, 1, 1, 1, 5, 5)

RUNNING_EXAMPLE = (2, 1, 2, 3, 3)
RUNNING_TWO_ROW = "2 1 2 3 3"
RUNNING_PATH = "(1,2)(4,3,2>(5,3,2>"
RUNNING_FACTOR = "[4,3,2,1|2][5,3|3]"
RUNNING_LINEAR = "([[4,5;3];2],1)"

LINE_LINEAR = "[[[[1;2];3];4];5]"
AMBIGUOUS_PAIR = ("[1,2,[3,4|6]]", "[[1,2],3,4|6]")

T4_REPRESENTATIVES = (
    "[1,2,3|4]",
    "[[1,2],3|4]",
    "[1,2|3]",
    "[[1,2|3],4]",
    "[1,2,3,4]",
    "[1,2,3]",
    "[1,2][3,4]",
    "[1,2]",
    "[1,2](3,4)",
    "()",
    "(1,2)",
    "([1,2],3)",
    "(1,2,3)",
    "([1,2|3],4)",
    "([1,2],[3,4])",
    "([1,2,3],4)",
    "(1,2)(3,4)",
    "([1,2],3,4)",
    "(1,2,3,4)",
)

CONJUGATION = ("([1,2],3,4)", "(1,2,3)", "([2,3],1,4)")


@dataclass(frozen=True)
class GoldenCase:
    name: str
    check: Callable[[], bool]


def _t4_matches() -> bool:
    reps = conjugacy_class_representatives(4)
    if len(reps) != 19:
        return False
    hit = set()
    for s in T4_REPRESENTATIVES:
        f = evaluate(s, 4)
        matches = [i for i, r in enumerate(reps) if are_conjugate(f, r)]
        if len(matches) != 1:
            return False
        hit.add(matches[0])
    return len(hit) == 19


def _t4_idempotents() -> bool:
    return all(
        structural_idempotent(canonicalize(s)) == is_idempotent(evaluate(s, 4))
        for s in T4_REPRESENTATIVES
    )


def _fig1() -> bool:
    f = evaluate(FIG1, 17)
    comps = decompose(f).components
    return (
        f.images == FIG1_IMAGES
        and len(comps) == 4
        and f(15) == 15
        and sorted(sorted(c.cycle) for c in comps) == [[6], [10, 11, 12], [15], [16, 17]]
    )


def _conjugation() -> bool:
    f_text, s_text, h_text = CONJUGATION
    return conjugate(evaluate(f_text, 4), evaluate(s_text, 4)) == evaluate(h_text, 4)


def golden_cases() -> list[GoldenCase]:
    run = Transformation(RUNNING_EXAMPLE)
    cases = [
        GoldenCase("fig1 string", _fig1),
        GoldenCase("fig1 canonical", lambda: canonicalize(FIG1) == FIG1.replace(" ", "")),
        GoldenCase("fig3 string", lambda: evaluate(FIG3).images == FIG3_IMAGES),
        GoldenCase("fig3 conveyor [4,3,2]", lambda: evaluate("[4,3,2]", 4).images == (1, 2, 2, 3)),
        GoldenCase("fig3 tree", lambda: evaluate("[[8,9|5],6,7|1]").images == (1, 2, 3, 4, 1, 1, 1, 5, 5)),
        GoldenCase("running example two-row", lambda: parse_image_list(RUNNING_TWO_ROW) == run),
        GoldenCase("running example path", lambda: emit_path(run) == RUNNING_PATH),
        GoldenCase("running example factorization parse", lambda: parse_factorization(RUNNING_FACTOR) == run),
        GoldenCase(
            "running example factorization emit",
            lambda: render_factorization(emit_factorization(run)) == RUNNING_FACTOR,
        ),
        GoldenCase("running example linear", lambda: parse_linear(RUNNING_LINEAR) == run),
        GoldenCase("line in linear notation", lambda: parse_linear(LINE_LINEAR).images == (2, 3, 4, 5, 5)),
        GoldenCase("identity ()", lambda: evaluate("()", 3).images == (1, 2, 3) and canonicalize("()") == "()"),
        GoldenCase("constant map [1,2,3|4]", lambda: evaluate("[1,2,3|4]").images == (4, 4, 4, 4)),
        GoldenCase("path [1,2,3,4]", lambda: evaluate("[1,2,3,4]").images == (2, 3, 4, 4)),
        GoldenCase(
            "ambiguity pair",
            lambda: evaluate(AMBIGUOUS_PAIR[0]) == evaluate(AMBIGUOUS_PAIR[1])
            and canonicalize(AMBIGUOUS_PAIR[0]) == AMBIGUOUS_PAIR[1],
        ),
        GoldenCase("conjugation by relabelling", _conjugation),
        GoldenCase("T4 representatives parse", lambda: all(evaluate(s, 4).degree == 4 for s in T4_REPRESENTATIVES)),
        GoldenCase("T4 classes", _t4_matches),
        GoldenCase("T4 idempotents", _t4_idempotents),
        GoldenCase("transposition (1,2)", lambda: canonical_form(evaluate("(1,2)")) == "(1,2)"),
    ]
    return cases


def run_corpus() -> Iterator[tuple[str, bool, str]]:
    """Yield ``(name, passed, detail)`` for each golden case."""
    for case in golden_cases():
        try:
            ok = bool(case.check())
            detail = ""
        except Exception as exc:  # a crash is a failure, reported not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield case.name, ok, detail
