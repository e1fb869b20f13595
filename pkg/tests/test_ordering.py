import pytest
from hypothesis import given, strategies as st

from janetbasis.ordering import DEGREVLEX, LEX, compare, get_order

monos = st.lists(st.integers(0, 5), min_size=3, max_size=3).map(tuple)
orders = st.sampled_from([LEX, DEGREVLEX])


def test_lex_x_above_y():
    assert compare((1, 0), (0, 1), LEX) > 0


@pytest.mark.parametrize("order", [LEX, DEGREVLEX])
def test_one_is_smallest(order):
    assert compare((0, 0), (1, 0), order) < 0
    assert compare((0, 0), (0, 1), order) < 0


def test_degrevlex_x2y_above_xyz():
    assert compare((2, 1, 0), (1, 1, 1), DEGREVLEX) > 0
    # lex agrees here; the two differ on x*z^2 vs y^3
    assert compare((1, 0, 2), (0, 3, 0), LEX) > 0
    assert compare((1, 0, 2), (0, 3, 0), DEGREVLEX) < 0


def test_degrevlex_xy_above_y2():
    assert compare((1, 1), (0, 2), DEGREVLEX) > 0


def test_get_order():
    assert get_order("lex") is LEX
    assert get_order(DEGREVLEX) is DEGREVLEX
    with pytest.raises(ValueError):
        get_order("grlex")


def test_max_min():
    assert DEGREVLEX.max([(0, 2), (1, 1), (0, 0)]) == (1, 1)
    assert DEGREVLEX.min([(0, 2), (1, 1), (0, 0)]) == (0, 0)


@given(orders, monos, monos, monos)
def test_total_transitive(order, u, v, w):
    assert compare(u, v, order) == -compare(v, u, order)
    assert (compare(u, v, order) == 0) == (u == v)
    if compare(u, v, order) <= 0 and compare(v, w, order) <= 0:
        assert compare(u, w, order) <= 0


@given(orders, monos, monos, monos)
def test_multiplicative(order, u, v, w):
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert compare(u, v, order) == compare(uw, vw, order)


@given(orders, monos)
def test_one_minimal(order, u):
    assert compare((0, 0, 0), u, order) <= 0


@given(monos, monos)
def test_degrevlex_degree_compatible(u, v):
    if sum(u) < sum(v):
        assert compare(u, v, DEGREVLEX) < 0
