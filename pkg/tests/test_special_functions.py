import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from src.exceptions import DomainError, IndexRangeError, PoleError
from src.numerics.special_functions import (
    LOG_SQRT_2PI, digamma, hurwitz_zeta, hurwitz_zeta_ds0, hurwitz_zeta_with_error, log_gamma, log_multiple_gamma,
    multiple_gamma, multiple_hurwitz_zeta, p_poly, polygamma,
)
from tests.conftest import assert_close

EULER_GAMMA = 0.5772156649015329


@pytest.mark.parametrize(
    "z, expected",
    [(1.0, 0.0), (0.5, 0.5 * math.log(math.pi)), (5.0, math.log(24.0))],
)
def test_log_gamma_values(z, expected):
    assert_close(log_gamma(z), expected, abs_tol=1e-14)


def test_log_gamma_pole():
    with pytest.raises(PoleError):
        log_gamma(-2.0)


@pytest.mark.parametrize(
    "z, expected",
    [(1.0, -EULER_GAMMA), (2.0, 1.0 - EULER_GAMMA), (0.5, -EULER_GAMMA - 2.0 * math.log(2.0))],
)
def test_digamma_values(z, expected):
    assert_close(digamma(z), expected, rel=1e-13)


@pytest.mark.parametrize("k, z", [(1, 0.7), (2, 2.5 + 1j), (3, 1.25 - 0.5j)])
def test_polygamma_matches_mpmath(k, z):
    assert_close(polygamma(k, z), complex(mpmath.psi(k, z)), rel=1e-11)


def test_hurwitz_reference_values():
    assert_close(hurwitz_zeta(2.0, 1.0), math.pi ** 2 / 6.0, rel=1e-13)
    assert_close(hurwitz_zeta(-1.0, 2.0), -13.0 / 12.0, rel=1e-12)


@pytest.mark.parametrize(
    "s, z",
    [(0.5, 2.0), (-1.5, 0.3), (3 + 4j, 1.5 - 1j), (-2.5 + 1j, 2.0 + 0.5j), (1.5, 10.0)],
)
def test_hurwitz_matches_mpmath(s, z):
    assert_close(hurwitz_zeta(s, z), complex(mpmath.zeta(s, z)), rel=1e-11)


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=-3.0, max_value=4.0),
    st.floats(min_value=0.1, max_value=5.0),
)
def test_hurwitz_index_shift(s, z):
    assume(abs(s - 1.0) > 1e-3)
    shifted = hurwitz_zeta(s, z) - hurwitz_zeta(s, z + 1.0)
    assert_close(shifted, z ** (-s), rel=1e-9, abs_tol=1e-12)


@pytest.mark.parametrize("s", [-4.5, -6.5, -8.5, -10.5, -8.5 + 3j])
@pytest.mark.parametrize("z", [0.7, 2.5 + 1j, 12.0])
def test_hurwitz_far_left_of_the_axis(s, z):
    value, error = hurwitz_zeta_with_error(s, z)
    expected = complex(mpmath.zeta(s, z))
    assert abs(value - expected) <= max(error, 1e-13 * abs(expected))
    assert_close(value, expected, rel=1e-12)


@pytest.mark.parametrize("s, z", [(0.5, 0.7), (2.0, 1.0), (3 + 4j, 1.5 - 1j), (0.05 + 20j, 3.0), (1.001, 2.0)])
def test_hurwitz_error_estimate_bounds_the_actual_error(s, z):
    value, error = hurwitz_zeta_with_error(s, z)
    assert abs(value - complex(mpmath.zeta(s, z))) <= 4 * error + 1e-300


@pytest.mark.parametrize("s", [-3.5, -5.5 + 1j])
def test_multiple_hurwitz_left_of_the_axis(s):
    z = 0.7
    zeta = lambda t: complex(mpmath.zeta(t, z))
    expected = 0.5 * (zeta(s - 2) + (3 - 2 * z) * zeta(s - 1) + (1 - z) * (2 - z) * zeta(s))
    assert_close(multiple_hurwitz_zeta(3, s, z), complex(expected), rel=1e-11)


def test_hurwitz_pole_and_domain():
    with pytest.raises(PoleError):
        hurwitz_zeta(1.0, 2.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, -2.0)


@pytest.mark.parametrize(
    "z, expected",
    [(1.0, -LOG_SQRT_2PI), (0.5, -0.5 * math.log(2.0)), (2.0, -LOG_SQRT_2PI)],
)
def test_hurwitz_derivative_at_zero(z, expected):
    assert_close(hurwitz_zeta_ds0(z), expected, rel=1e-10)


@pytest.mark.parametrize("z", [2.5, 1 + 1j, 3 + 2j])
def test_lerch_formula(z):
    assert_close(hurwitz_zeta_ds0(z), complex(mpmath.loggamma(z)) - LOG_SQRT_2PI, rel=1e-10, abs_tol=1e-12)


def test_p_poly_values():
    assert p_poly(1, 0, 3 + 1j) == 1
    assert p_poly(2, 1, 2.5) == 1
    assert_close(p_poly(2, 0, 2.5 + 1j), 1 - (2.5 + 1j))
    with pytest.raises(IndexRangeError):
        p_poly(2, 2, 1.0)


def test_multiple_hurwitz_zeta():
    assert_close(multiple_hurwitz_zeta(2, 3.0, 1.0), math.pi ** 2 / 6.0, rel=1e-12)
    assert_close(multiple_hurwitz_zeta(1, 0.5, 2.0), hurwitz_zeta(0.5, 2.0), rel=1e-14)
    with pytest.raises(PoleError):
        multiple_hurwitz_zeta(3, 2.0, 1.0)


@pytest.mark.parametrize("s, z", [(4.5, 1.25), (5.0 + 1j, 2.0)])
def test_multiple_hurwitz_matches_weighted_sum(s, z):
    # (l+1)(l+2)/2 rewritten in powers of u = z + l
    zeta = lambda t: complex(mpmath.zeta(t, z))
    expected = 0.5 * (zeta(s - 2) + (3 - 2 * z) * zeta(s - 1) + (1 - z) * (2 - z) * zeta(s))
    assert_close(multiple_hurwitz_zeta(3, s, z), complex(expected), rel=1e-10)


def test_multiple_gamma_of_order_one():
    assert_close(multiple_gamma(1, 0.5), 1.0 / math.sqrt(2.0), rel=1e-9)
    z = 2.0 + 1.5j
    assert_close(multiple_gamma(1, z), complex(mpmath.gamma(z)) / math.sqrt(2.0 * math.pi), rel=1e-9)


def test_log_multiple_gamma_of_order_two():
    # log Gamma_2(z) = zeta_H'(-1, z) + (1 - z) zeta_H'(0, z)
    z = 1.5
    expected = complex(mpmath.diff(lambda s: mpmath.zeta(s, z), -1)) + (1 - z) * (
        complex(mpmath.loggamma(z)) - LOG_SQRT_2PI
    )
    assert_close(log_multiple_gamma(2, z), expected, rel=1e-9)
    assert cmath.isclose(multiple_gamma(2, z), cmath.exp(expected), rel_tol=1e-9)
