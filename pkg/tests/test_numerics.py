import cmath
import math

import numpy as np
import pytest

from src.exceptions import DomainError, QuadratureError
from src.numerics.context import DEFAULT_CONTEXT, EvalContext, resolve_context
from src.numerics.differentiation import contour_residue, richardson_derivative
from src.numerics.quadrature import complex_quad, geometric_edges, power_weighted_quad
from tests.conftest import assert_close


def test_context_overrides_skip_none():
    context = EvalContext().with_overrides(target_rel_error=1e-6, series_truncation=None)
    assert context.target_rel_error == 1e-6
    assert context.series_truncation == DEFAULT_CONTEXT.series_truncation
    assert context.quad_limit == 8 * context.quadrature_nodes


def test_context_rejects_bad_values():
    with pytest.raises(DomainError):
        EvalContext(target_rel_error=0.0)
    with pytest.raises(DomainError):
        EvalContext(quadrature_nodes=4)


def test_resolve_context():
    assert resolve_context(None) is DEFAULT_CONTEXT
    custom = EvalContext(target_rel_error=1e-5)
    assert resolve_context(custom) is custom


def test_complex_quad():
    value, error = complex_quad(lambda y: cmath.exp(1j * y), 0.0, math.pi, 1e-12, 1e-12, 100)
    assert_close(value, 2j, abs_tol=1e-12)
    assert error < 1e-10


def test_complex_quad_folds_missed_tolerance_into_the_error():
    # one subdivision cannot resolve 60 oscillations
    _, error = complex_quad(lambda y: cmath.exp(40j * y), 0.0, 10.0, 1e-12, 1e-12, 1)
    assert error >= 1e-11


def test_complex_quad_infinite_interval():
    value, _ = complex_quad(lambda y: math.exp(-y) * (1 + 1j), 0.0, np.inf, 1e-12, 1e-12, 100)
    assert_close(value, 1 + 1j, rel=1e-10)


@pytest.mark.parametrize("s", [0.5, 0.5 + 1j, -0.5, 0.75 - 1j])
def test_power_weighted_quad(s):
    value, _ = power_weighted_quad(lambda y: 1.0, complex(s), 1.0, 1e-12, 1e-12, 200)
    assert_close(value, 1.0 / (1.0 - s), rel=1e-8)


def test_power_weighted_quad_rejects_non_integrable_weight():
    with pytest.raises(QuadratureError):
        power_weighted_quad(lambda y: 1.0, 1.0 + 0j, 1.0, 1e-12, 1e-12, 100)


def test_geometric_edges():
    assert geometric_edges(1.0, 1000.0) == [1.0, 10.0, 100.0, 1000.0]
    assert geometric_edges(1.0, 50.0) == [1.0, 10.0, 50.0]


def test_richardson_derivative():
    value, error = richardson_derivative(cmath.exp, 0j, 0.1)
    assert_close(value, 1.0, rel=1e-12)
    value, _ = richardson_derivative(cmath.sin, 1 + 1j, 0.1)
    assert_close(value, cmath.cos(1 + 1j), rel=1e-11)


def test_contour_residue():
    value, error = contour_residue(lambda s: 3.0 / (s - 2.0) + s * s, 2.0 + 0j, 32)
    assert_close(value, 3.0, rel=1e-12)
    assert error < 1e-10
