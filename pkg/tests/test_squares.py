import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisum.squares import (
    NoRepresentation,
    NotRepresentable,
    ThreeSquares,
    TwoSquares,
    eligible_three_squares,
    is_square,
    three_squares,
    two_squares,
)


def _eligible_by_definition(m: int) -> bool:
    # strip factors of 4, then test the residue class directly
    while m % 4 == 0 and m > 0:
        m //= 4
    return m % 8 != 7


def test_is_square():
    squares = {k * k for k in range(100)}
    for m in range(5000):
        assert is_square(m) == (m in squares)


def test_eligibility_matches_definition():
    for m in range(20000):
        assert eligible_three_squares(m) == _eligible_by_definition(m), m


@pytest.mark.parametrize(
    "m,expected",
    [
        (0, (0, 0, 0)),
        (1, (0, 0, 1)),
        (2, (0, 1, 1)),
        (3, (1, 1, 1)),
        (5, (0, 1, 2)),
        (6, (1, 1, 2)),
        (14, (1, 2, 3)),
        (25, (0, 3, 4)),
        (29, (0, 2, 5)),
        (30, (1, 2, 5)),
        (42, (1, 4, 5)),
        (62, (1, 5, 6)),
        (254, (2, 5, 15)),
        (579, (1, 7, 23)),
    ],
)
def test_three_squares_canonical_values(m, expected):
    assert three_squares(m) == ThreeSquares(*expected)


@pytest.mark.parametrize("m", [7, 15, 23, 28, 112, 2**10 * 7])
def test_three_squares_rejects_ineligible(m):
    assert not eligible_three_squares(m)
    with pytest.raises(NotRepresentable):
        three_squares(m)


@given(st.integers(min_value=0, max_value=200000))
@settings(max_examples=300)
def test_three_squares_sound_and_ordered(m):
    if not eligible_three_squares(m):
        with pytest.raises(NotRepresentable):
            three_squares(m)
        return
    t = three_squares(m)
    assert t.a * t.a + t.b * t.b + t.c * t.c == m
    assert 0 <= t.a <= t.b <= t.c


def test_three_squares_prefers_distinct_components():
    # when a fully distinct decomposition exists at the same leading
    # component it wins over one with repeats
    assert three_squares(54) == (1, 2, 7)
    assert len(set(three_squares(30))) == 3
    # but inputs with no distinct option still come back first-found
    assert three_squares(3) == (1, 1, 1)
    assert three_squares(2) == (0, 1, 1)


@pytest.mark.parametrize(
    "m,expected",
    [(0, (0, 0)), (2, (1, 1)), (250, (15, 5)), (578, (23, 7))],
)
def test_two_squares_canonical_values(m, expected):
    assert two_squares(m) == TwoSquares(*expected)


@pytest.mark.parametrize("m", [3, 7, 21, 42, 2 * 9 * 49 * 3])
def test_two_squares_unrepresentable(m):
    with pytest.raises(NoRepresentation):
        two_squares(m)


@given(st.integers(min_value=0, max_value=50000))
@settings(max_examples=300)
def test_two_squares_returns_largest_leading_component(m):
    best = None
    for q in range(math.isqrt(m // 2) + 1):
        p2 = m - q * q
        p = math.isqrt(p2)
        if p * p == p2:
            best = (p, q)
            break
    if best is None:
        with pytest.raises(NoRepresentation):
            two_squares(m)
    else:
        assert two_squares(m) == best
        assert two_squares(m).p >= two_squares(m).q
