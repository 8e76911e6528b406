import math

import mpmath
import pytest

from src.models.builtin_models import DirichletPolynomialModel, ReciprocalGammaModel
from src.numerics.context import EvalContext
from src.services.superzeta_service import SuperzetaService
from src.services.voros_service import VorosService, reciprocal_gamma_expansion

mpmath.mp.dps = 30

# Z(2, 1) for f = 1 - 2^(-z)
TWO_LOG2_SQUARED = 2.0 * math.log(2.0) ** 2


def assert_close(actual, expected, rel=1e-10, abs_tol=0.0):
    actual, expected = complex(actual), complex(expected)
    assert abs(actual - expected) <= max(rel * abs(expected), abs_tol), f"{actual} != {expected}"


@pytest.fixture
def context():
    return EvalContext()


@pytest.fixture
def loose_context():
    return EvalContext(target_rel_error=1e-7)


@pytest.fixture
def dirichlet_polynomial():
    return DirichletPolynomialModel(2.0)


@pytest.fixture
def reciprocal_gamma():
    return ReciprocalGammaModel()


@pytest.fixture
def superzeta(context):
    return SuperzetaService(context)


@pytest.fixture
def voros(context):
    return VorosService(context)


@pytest.fixture(scope="session")
def gamma_fixture():
    return reciprocal_gamma_expansion()
