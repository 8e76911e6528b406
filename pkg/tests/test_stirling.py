from fractions import Fraction
from math import prod

import mpmath
import pytest
from hypothesis import given, strategies as st

from src.exceptions import IndexRangeError
from src.numerics.stirling import bernoulli_numbers, binom, eulerian_numbers, stirling_table


def test_small_stirling_entries():
    table = stirling_table(4)
    assert [table.entry(3, l) for l in range(4)] == [0, 2, -3, 1]
    assert [table.entry(4, l) for l in range(5)] == [0, -6, 11, -6, 1]
    assert table.entry(3, 7) == 0


def test_entry_outside_table():
    with pytest.raises(IndexRangeError):
        stirling_table(3).entry(5, 1)


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=-6, max_value=6))
def test_pochhammer_coefficients_expand_rising_factorial(m, a):
    coefficients = stirling_table(8).pochhammer_coefficients(m)
    assert sum(c * a ** l for l, c in enumerate(coefficients)) == prod(a + i for i in range(m))


def test_eulerian_rows():
    assert eulerian_numbers(0) == (1,)
    assert eulerian_numbers(1) == (1,)
    assert eulerian_numbers(3) == (1, 4, 1)
    assert eulerian_numbers(4) == (1, 11, 11, 1)


@pytest.mark.parametrize(
    "top, bottom, expected",
    [(5, 2, 10), (3, 5, 0), (5, -1, 0), (-1, 3, -1), (-2, 2, 3), (0, 0, 1)],
)
def test_extended_binomial(top, bottom, expected):
    assert binom(top, bottom) == expected


def test_bernoulli_numbers_are_exact():
    numbers = bernoulli_numbers(12)
    assert numbers[:5] == (Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30))
    assert numbers[12] == Fraction(-691, 2730)
    assert all(numbers[k] == 0 for k in range(3, 13, 2))


def test_bernoulli_numbers_match_mpmath_far_out():
    assert bernoulli_numbers(60)[60] == Fraction(*mpmath.bernfrac(60))
