"""Exit criteria for the package, one test per criterion.

Each criterion reports a PASS/FAIL line (shown in the pytest summary, or
on stdout when this file is run directly).
"""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from strategies import all_maps, brute_orbit_indices, eval_cycles
from transnot import (
    Transformation,
    are_conjugate,
    canonical_form,
    conjugacy_class_representatives,
    conjugate,
    decompose,
    emit_factorization,
    emit_linear,
    emit_path,
    evaluate,
    interpret,
    is_idempotent,
    orbit_indices,
    parse_compact,
    parse_factorization,
    parse_image_list,
    parse_linear,
    relabel,
    render_factorization,
    structural_idempotent,
)
from transnot.corpus import (
    AMBIGUOUS_PAIR,
    CONJUGATION,
    FIG1,
    FIG1_IMAGES,
    FIG3,
    FIG3_IMAGES,
    RUNNING_FACTOR,
    RUNNING_LINEAR,
    RUNNING_PATH,
    RUNNING_TWO_ROW,
    T4_REPRESENTATIVES,
)
from transnot.legacy import Dialect, emit_dialect, parse_dialect
from transnot.transformation import permutations


def _report(number, title, failures, elapsed, limit):
    ok = not failures and (limit is None or elapsed < limit)
    budget = f" < {limit:g}s" if limit is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{elapsed:.2f}s{budget}]"
    if failures:
        line += f" {len(failures)} mismatch(es), first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, failures[:5]
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def criterion_golden_corpus():
    fails = []
    fig1 = evaluate(FIG1, 17)
    comps = decompose(fig1).components
    if fig1.images != FIG1_IMAGES or len(comps) != 4 or fig1(15) != 15:
        fails.append("fig1")
    if evaluate(FIG3).images != FIG3_IMAGES:
        fails.append("fig3")
    running = Transformation([2, 1, 2, 3, 3])
    if parse_image_list(RUNNING_TWO_ROW) != running:
        fails.append("two-row")
    if emit_path(running) != RUNNING_PATH:
        fails.append("path")
    if parse_factorization(RUNNING_FACTOR) != running:
        fails.append("factorization")
    if parse_linear(RUNNING_LINEAR) != running:
        fails.append("linear")
    if parse_linear("[[[[1;2];3];4];5]").images != (2, 3, 4, 5, 5):
        fails.append("linear line")
    if evaluate(AMBIGUOUS_PAIR[0]) != evaluate(AMBIGUOUS_PAIR[1]):
        fails.append("ambiguity pair")
    f, s, h = CONJUGATION
    if conjugate(evaluate(f, 4), evaluate(s, 4)) != evaluate(h, 4):
        fails.append("conjugation")
    for text in T4_REPRESENTATIVES + ("()", "[1,2,3|4]", "[1,2,3,4]", "[4,3,2]"):
        parse_compact(text, strict=True)
    return fails


def criterion_t4_classification():
    fails = []
    for n, expected in [(1, 1), (2, 3), (3, 7)]:
        got = len(conjugacy_class_representatives(n))
        if got != expected:
            fails.append(f"T{n}: {got} classes")
    reps = conjugacy_class_representatives(4)
    if len(reps) != 19:
        fails.append(f"T4: {len(reps)} classes")
    matched = set()
    for text in T4_REPRESENTATIVES:
        f = evaluate(text, 4)
        hits = [i for i, r in enumerate(reps) if are_conjugate(f, r)]
        if len(hits) != 1:
            fails.append(f"{text} conjugate to {len(hits)} representatives")
        matched.update(hits)
        if structural_idempotent(canonical_form(f)) != is_idempotent(f):
            fails.append(f"idempotent mismatch for {text}")
    if len(matched) != 19:
        fails.append("paper list does not cover all classes")
    for r in reps:
        if structural_idempotent(canonical_form(r)) != is_idempotent(r):
            fails.append(f"idempotent mismatch for {canonical_form(r)}")
    return fails


def criterion_exhaustive_roundtrip():
    fails = []
    dialects = [Dialect.IMAGE_LIST, Dialect.LINEAR, Dialect.FACTOR, Dialect.COMPACT]
    for n in range(1, 5):
        for f in all_maps(n):
            s = canonical_form(f)
            if interpret(parse_compact(s), n) != f:
                fails.append(f"compact {f}")
            if canonical_form(evaluate(s)) != s:
                fails.append(f"idempotence {s}")
            if structural_idempotent(s) != is_idempotent(f):
                fails.append(f"idempotent {s}")
            for d in dialects:
                if parse_dialect(emit_dialect(f, d), d, n) != f:
                    fails.append(f"{d.value} {f}")
    return fails


def criterion_random_roundtrip():
    fails = []
    rng = random.Random(20161)
    for n in (10, 32, 64):
        for _ in range(1000):
            f = Transformation(rng.randrange(n) + 1 for _ in range(n))
            if interpret(parse_compact(canonical_form(f)), n) != f:
                fails.append(f"compact {f}")
            if parse_linear(emit_linear(f), n) != f:
                fails.append(f"linear {f}")
            if parse_factorization(render_factorization(emit_factorization(f)), n) != f:
                fails.append(f"factorization {f}")
    return fails


def criterion_permutations():
    fails = []
    for s in permutations(4):
        text = canonical_form(s)
        if "[" in text or "|" in text or eval_cycles(text, 4) != s.images:
            fails.append(text)
    if canonical_form(Transformation([1, 2, 3, 4])) != "()":
        fails.append("identity")
    return fails


def criterion_orbit_indices():
    fails = []
    for f in all_maps(3):
        on_cycle = {p for c in decompose(f).components for p in c.cycle}
        for x in range(1, 4):
            got = orbit_indices(f, x)
            if tuple(got) != brute_orbit_indices(f, x):
                fails.append(f"{f} at {x}")
            if (x in on_cycle) != (got.tail == 0):
                fails.append(f"cycle membership {f} at {x}")
    return fails


def criterion_conjugation():
    fails = []
    perms = list(permutations(4))
    for f in all_maps(4):
        ast = parse_compact(canonical_form(f))
        for s in perms:
            if conjugate(f, s) != interpret(relabel(ast, s), 4):
                fails.append(f"{f} by {s}")
    return fails


CRITERIA = [
    (1, "golden corpus of published strings", criterion_golden_corpus, 1.0),
    (2, "T4 classification (19 classes; T1..T3 = 1, 3, 7)", criterion_t4_classification, 10.0),
    (3, "exhaustive roundtrip over T1..T4", criterion_exhaustive_roundtrip, 5.0),
    (4, "randomized roundtrip, 1000 maps at degrees 10/32/64", criterion_random_roundtrip, 30.0),
    (5, "permutations print as orbit-cycle notation", criterion_permutations, None),
    (6, "orbit indices over T3", criterion_orbit_indices, None),
    (7, "conjugation equals relabelling over T4 x S4", criterion_conjugation, 20.0),
]


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit):
    start = time.perf_counter()
    failures = check()
    _report(number, title, failures, time.perf_counter() - start, limit)


if __name__ == "__main__":
    for number, title, check, limit in CRITERIA:
        start = time.perf_counter()
        try:
            _report(number, title, check(), time.perf_counter() - start, limit)
        except AssertionError:
            pass
