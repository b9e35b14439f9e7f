import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonloose.farey import (
    INFINITY,
    ZERO,
    FareyError,
    SignedVector,
    Slope,
    cross,
    cw_between,
    dot,
    farey_diff,
    farey_sum,
    has_edge,
    iterated_sum,
)
from oracles import bounded_slopes, intersection_count


@st.composite
def slopes(draw, max_height=30):
    num = draw(st.integers(-max_height, max_height))
    den = draw(st.integers(0, max_height))
    if (num, den) == (0, 0):
        num = 1
    return Slope(num, den)


def test_canonical_form():
    assert Slope(2, 4) == Slope(1, 2)
    assert Slope(-2, -4) == Slope(1, 2)
    assert Slope(-3, 0) == INFINITY
    assert Slope(0, -7) == ZERO
    with pytest.raises(FareyError):
        Slope(0, 0)


def test_parse_round_trip():
    for text in ("1/0", "-5/2", "0/1", "3"):
        assert str(Slope.parse(text)) == str(Slope.parse(str(Slope.parse(text))))
    assert Slope.parse("-1/0") == INFINITY


def test_dot_examples():
    assert dot(Slope(1, 2), Slope(1, 3)) == 1
    assert dot(Slope(7, 3), Slope(7, 3)) == 0
    assert dot(ZERO, INFINITY) == -1


def test_has_edge_examples():
    assert has_edge(ZERO, INFINITY)
    assert not has_edge(ZERO, Slope(2, 1))
    assert not has_edge(Slope(5, 7), Slope(5, 7))


def test_mediant_examples():
    assert farey_sum(ZERO, INFINITY) == Slope(1, 1)
    assert farey_sum(Slope(-1), INFINITY) == Slope(-2)
    assert farey_sum(INFINITY, Slope(-3)) == Slope(-4)
    assert farey_sum(Slope(-3), Slope(-5, 2)) == Slope(-8, 3)


def test_mediant_rejects_bad_operands():
    with pytest.raises(FareyError):
        farey_sum(Slope(1, 2), Slope(1, 2))
    with pytest.raises(FareyError):
        farey_sum(ZERO, Slope(2, 1))


def test_iterated_sum():
    assert iterated_sum(INFINITY, 0, Slope(-3)) == INFINITY
    assert iterated_sum(Slope(-3), 1, Slope(-5, 2)) == Slope(-8, 3)
    for p in (2, 3, 5, 7):
        for k in range(1, 5):
            assert iterated_sum(INFINITY, k, Slope(-p)) == Slope(-(k * p + 1), k)


def test_farey_diff_examples():
    assert farey_diff(Slope(-1), Slope(-2)) == SignedVector(1, 0)
    assert farey_diff(Slope(9, 4), Slope(9, 4)) == SignedVector(0, 0)
    for n in range(-4, 5):
        assert farey_diff(Slope(n), Slope(n - 1)) == SignedVector(1, 0)


def test_farey_diff_unreduced():
    assert farey_diff(Slope(3, 1), Slope(1, 3)) == SignedVector(2, -2)


def test_cw_between_examples():
    assert cw_between(Slope(-5, 2), Slope(-2), Slope(-1))
    assert cw_between(Slope(-7, 3), Slope(-7, 3), Slope(1, 2))
    assert not cw_between(ZERO, Slope(-1), INFINITY)
    assert cw_between(INFINITY, Slope(-4), Slope(-3))
    with pytest.raises(FareyError):
        cw_between(ZERO, Slope(1), ZERO)


@given(slopes(), slopes())
@settings(max_examples=200)
def test_dot_antisymmetric(x, y):
    assert dot(x, y) == -dot(y, x)


@given(slopes(), slopes(), slopes())
@settings(max_examples=300)
def test_cw_between_trichotomy(a, x, b):
    if a == b or x in (a, b):
        return
    assert cw_between(a, x, b) != cw_between(b, x, a)


def test_mediant_is_commutative_and_adjacent_to_both():
    pool = bounded_slopes(14)
    pairs = [(x, y) for x in pool for y in pool if x != y and has_edge(x, y)]
    assert pairs
    for x, y in pairs:
        m = farey_sum(x, y)
        assert m == farey_sum(y, x)
        assert has_edge(x, m) and has_edge(y, m)
        # the mediant separates its parents: strictly inside one arc
        assert m not in (x, y)
        assert cw_between(x, m, y) != cw_between(y, m, x)


def test_dot_matches_geometric_intersections():
    pool = [s for s in bounded_slopes(12)]
    for x in pool:
        for y in pool:
            assert abs(dot(x, y)) == intersection_count(x, y), (x, y)


def test_cross_pairing():
    assert cross(SignedVector(1, 0), Slope(-5, 2)) == 2
    assert cross(SignedVector(2, -1), ZERO) == 2 * 1 - (-1) * 0
    assert cross(SignedVector(1, 2), SignedVector(3, 4)) == -2
