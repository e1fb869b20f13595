import itertools
import random

import pytest
from hypothesis import given, strategies as st

from janetbasis.janet import (
    JanetIndex,
    JanetPartition,
    check_division_axioms,
    find_involutive_divisor,
    is_involutive_divisor,
    janet_partition,
)

X, Y = 0, 1
x2, y2, xy, xy2 = (2, 0), (0, 2), (1, 1), (1, 2)


def test_singleton_all_multiplicative():
    p = janet_partition({x2})
    assert p.multiplicative(x2) == {X, Y}
    assert p.nonmultiplicative(x2) == set()


def test_x2_y2():
    p = janet_partition({x2, y2})
    assert p.multiplicative(x2) == {X, Y}
    assert p.multiplicative(y2) == {Y}
    assert p.nonmultiplicative(y2) == {X}


def test_three_quadrics():
    p = janet_partition({x2, xy, y2})
    assert p.multiplicative(x2) == {X, Y}
    assert p.multiplicative(xy) == {Y}
    assert p.multiplicative(y2) == {Y}


def test_partition_errors_and_duplicates():
    with pytest.raises(ValueError):
        JanetPartition([])
    with pytest.raises(ValueError):
        JanetPartition([(1, 0), (1, 0, 0)])
    with pytest.raises(ValueError):
        janet_partition({x2}).multiplicative(y2)
    assert janet_partition([x2, x2, y2]) == janet_partition([y2, x2])


def test_involutive_divisor_examples():
    p = janet_partition({x2, y2})
    assert is_involutive_divisor(y2, (0, 3), p)
    assert not is_involutive_divisor(y2, xy2, p)
    assert is_involutive_divisor(x2, x2, p)
    assert is_involutive_divisor(y2, y2, p)


def test_find_involutive_divisor_examples():
    U = {x2, y2}
    p = janet_partition(U)
    assert find_involutive_divisor(xy2, U, p) is None
    assert find_involutive_divisor((3, 0), U, p) == x2
    U3 = {x2, y2, xy2}
    assert find_involutive_divisor((2, 2), U3, janet_partition(U3)) == x2


def test_index_matches_partition():
    U = [x2, y2, xy2]
    idx = JanetIndex(U)
    assert idx.divisor((2, 2)) == 0
    assert idx.divisor((1, 3)) == 2
    assert idx.divisor((1, 1)) is None
    assert idx.nonmultiplicative(y2) == {X}
    assert JanetIndex([]).divisor((1, 1)) is None
    with pytest.raises(ValueError):
        JanetIndex([x2, x2])


def test_axioms_examples():
    assert check_division_axioms({x2, xy, y2}).ok
    assert check_division_axioms({(3, 1, 4)}).ok
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 3)
        U = {tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(1, 6))}
        assert check_division_axioms(U).ok, U


monosets = st.integers(1, 3).flatmap(
    lambda n: st.sets(st.tuples(*[st.integers(0, 4)] * n), min_size=1, max_size=7)
)


@given(monosets)
def test_partition_covers_and_first_variable_rule(U):
    p = janet_partition(U)
    n = len(next(iter(U)))
    top = max(u[0] for u in U)
    for u in U:
        m, nm = p.multiplicative(u), p.nonmultiplicative(u)
        assert m | nm == set(range(n)) and not m & nm
        assert (0 in m) == (u[0] == top)


@given(monosets)
def test_index_agrees_with_brute_force(U):
    U = sorted(U)
    p = janet_partition(U)
    idx = JanetIndex(U)
    n = len(U[0])
    for v in itertools.product(range(6), repeat=n):
        divisors = [u for u in U if is_involutive_divisor(u, v, p)]
        # disjoint cones: at most one Janet divisor
        assert len(divisors) <= 1
        j = idx.divisor(v)
        assert (U[j] if j is not None else None) == (divisors[0] if divisors else None)
        for u in divisors:
            assert all(a <= b for a, b in zip(u, v))


@given(monosets)
def test_monotone_on_subsets(U):
    U = sorted(U)
    p = janet_partition(U)
    for u in U:
        others = [w for w in U if w != u]
        for r in range(len(others) + 1):
            for V in itertools.combinations(others, r):
                assert p.multiplicative(u) <= janet_partition([u, *V]).multiplicative(u)


@given(monosets, st.randoms())
def test_partition_order_insensitive(U, rnd):
    L = list(U)
    rnd.shuffle(L)
    assert janet_partition(L) == janet_partition(U)
