import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import all_maps, brute_orbit_indices, transformations
from transnot import (
    BoundExceededError,
    DegreeMismatchError,
    NotAPermutationError,
    PointOutOfRangeError,
    Transformation,
    apply,
    are_conjugate,
    compose,
    conjugacy_class_representatives,
    conjugate,
    decompose,
    evaluate,
    identity,
    inverse,
    is_idempotent,
    is_permutation,
    orbit_indices,
    power,
    preimages,
)
from transnot.transformation import all_transformations, conjugacy_classes, permutations

RUNNING = Transformation([2, 1, 2, 3, 3])


def test_construction_rejects_out_of_range_images():
    with pytest.raises(PointOutOfRangeError):
        Transformation([1, 3])
    with pytest.raises(PointOutOfRangeError):
        Transformation([0])


def test_degree_zero_is_the_empty_identity():
    e = Transformation(())
    assert e == identity(0)
    assert compose(e, e) == e
    assert decompose(e).components == ()
    assert is_permutation(e) and is_idempotent(e)


@pytest.mark.parametrize("f, x, expected", [(identity(5), 3, 3), (RUNNING, 4, 3), (RUNNING, 5, 3)])
def test_apply(f, x, expected):
    assert apply(f, x) == expected
    assert f(x) == expected


@pytest.mark.parametrize("x", [0, 6, -1])
def test_apply_out_of_range(x):
    with pytest.raises(PointOutOfRangeError):
        apply(RUNNING, x)


def test_compose_examples():
    assert compose(RUNNING, identity(5)) == RUNNING
    g1 = Transformation([2, 1, 2, 3, 5])  # factor [4,3,2,1|2]
    g2 = Transformation([1, 2, 3, 4, 3])  # factor [5,3|3]
    assert compose(g1, g2) == RUNNING
    f = Transformation([2, 2, 3])
    assert compose(f, f) == f


def test_compose_applies_first_argument_first():
    f = Transformation([2, 2])
    g = Transformation([2, 1])
    assert compose(f, g).images == (1, 1)
    assert compose(g, f).images == (2, 2)
    assert f * g == compose(f, g)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(2), identity(3))


def test_power_examples():
    assert power(RUNNING, 0) == identity(5)
    path = Transformation([2, 3, 4, 5, 5])
    assert power(path, 4) == Transformation([5] * 5)
    assert power(Transformation([2, 1]), 2) == identity(2)


@given(transformations(max_degree=8), st.integers(0, 20))
def test_power_matches_repeated_composition(f, e):
    expected = identity(f.degree)
    for _ in range(e):
        expected = compose(expected, f)
    assert power(f, e) == expected


def test_orbit_indices_examples():
    assert orbit_indices(identity(3), 2) == (0, 1)
    assert orbit_indices(RUNNING, 5) == (2, 2)
    assert orbit_indices(RUNNING, 1) == (0, 2)
    assert orbit_indices(RUNNING, 5).tail == 2


def test_orbit_indices_out_of_range():
    with pytest.raises(PointOutOfRangeError):
        orbit_indices(RUNNING, 6)


@given(transformations(min_degree=1, max_degree=9), st.data())
def test_orbit_indices_minimal(f, data):
    x = data.draw(st.integers(1, f.degree))
    m, k = orbit_indices(f, x)
    assert (m, k) == brute_orbit_indices(f, x)
    assert power(f, m)(x) == power(f, m + k)(x)


def test_preimages_examples():
    const = Transformation([4, 4, 4, 4])
    assert preimages(const, 4) == {1, 2, 3, 4}
    assert preimages(const, 2) == set()
    assert preimages(RUNNING, 2) == {1, 3}


def test_decompose_fig1():
    f = evaluate("[[[1,3|2],5|4],6] ([[7,8|9],10],11,[14,13,12])(16,17)", 17)
    comps = decompose(f).components
    assert len(comps) == 4
    assert [set(c.cycle) for c in comps] == [{6}, {10, 11, 12}, {15}, {16, 17}]


def test_decompose_identity():
    comps = decompose(identity(3)).components
    assert [(c.cycle, c.forests[0].children) for c in comps] == [((1,), ()), ((2,), ()), ((3,), ())]


def test_decompose_running_example():
    (comp,) = decompose(RUNNING).components
    assert comp.cycle == (1, 2)
    tree_at_2 = comp.forests[1]
    (three,) = tree_at_2.children
    assert three.point == 3
    assert sorted(c.point for c in three.children) == [4, 5]
    assert comp.forests[0].children == ()


@settings(max_examples=300)
@given(transformations(max_degree=12))
def test_decompose_partitions_and_reconstructs(f):
    d = decompose(f)
    assert d.to_transformation() == f
    points = [p for c in d.components for p in c.points()]
    assert sorted(points) == list(range(1, f.degree + 1))
    on_cycle = {p for c in d.components for p in c.cycle}
    assert on_cycle == {x for x in range(1, f.degree + 1) if orbit_indices(f, x).tail == 0}


def test_permutation_and_idempotent_flags():
    assert (is_permutation(identity(4)), is_idempotent(identity(4))) == (True, True)
    assert is_idempotent(evaluate("[1,2|3]", 3))
    t = Transformation([2, 1])
    assert is_permutation(t) and not is_idempotent(t)


def test_conjugate_examples():
    f = evaluate("([1,2],3,4)")
    s = evaluate("(1,2,3)", 4)
    assert f.images == (2, 3, 4, 2)
    assert s.images == (2, 3, 1, 4)
    assert conjugate(f, s).images == (4, 3, 1, 3)
    assert conjugate(f, s) == evaluate("([2,3],1,4)")
    assert conjugate(f, identity(4)) == f


def test_conjugating_a_constant_map_gives_a_constant_map():
    const = Transformation([1, 1, 1])
    for s in permutations(3):
        assert conjugate(const, s) == Transformation([s(1)] * 3)


def test_conjugate_errors():
    with pytest.raises(NotAPermutationError):
        conjugate(RUNNING, RUNNING)
    with pytest.raises(DegreeMismatchError):
        conjugate(RUNNING, identity(4))


def test_conjugate_inverse_roundtrip_exhaustive():
    for n in range(5):
        perms = list(permutations(n))
        for f in all_transformations(n):
            for s in perms:
                assert conjugate(conjugate(f, s), inverse(s)) == f


def test_compose_associative_exhaustive_small():
    for n in range(4):
        maps = all_maps(n)
        for f, g, h in itertools.product(maps, repeat=3):
            assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(transformations(min_degree=10, max_degree=10), transformations(min_degree=10, max_degree=10),
       transformations(min_degree=10, max_degree=10))
def test_compose_associative_random(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_are_conjugate_examples():
    assert are_conjugate(RUNNING, RUNNING)
    assert are_conjugate(Transformation([1] * 4), Transformation([4] * 4))
    assert not are_conjugate(Transformation([2, 1]), identity(2))


def test_are_conjugate_bound():
    with pytest.raises(BoundExceededError):
        are_conjugate(identity(9), identity(9))


def test_are_conjugate_is_an_equivalence_relation():
    for n in range(5):
        maps = all_maps(n)
        related = {f: {g for g in maps if are_conjugate(f, g)} for f in maps}
        for f in maps:
            assert f in related[f]
            for g in related[f]:
                assert related[g] == related[f]


def _burnside_count(n):
    # orbits of S_n on T_n = average number of maps fixed by a permutation
    perms = list(permutations(n))
    maps = all_maps(n)
    fixed = sum(1 for s in perms for f in maps if conjugate(f, s) == f)
    assert fixed % len(perms) == 0
    return fixed // len(perms)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_class_counts_match_burnside(n):
    assert len(conjugacy_class_representatives(n)) == _burnside_count(n)


def test_class_counts_small():
    # values from the Burnside oracle above (and 19 from the published list)
    assert [len(conjugacy_class_representatives(n)) for n in (1, 2, 3, 4)] == [1, 3, 7, 19]


def test_classes_partition_tn():
    classes = conjugacy_classes(3)
    members = [f for c in classes for f in c]
    assert len(members) == 27 == len(set(members))
    for c in classes:
        assert all(are_conjugate(c[0], g) for g in c)


def test_class_representatives_bound():
    with pytest.raises(BoundExceededError):
        conjugacy_class_representatives(6)


def test_random_large_degree_decomposition():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 200)
        f = Transformation(rng.randrange(n) + 1 for _ in range(n))
        assert decompose(f).to_transformation() == f
