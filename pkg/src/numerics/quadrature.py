import warnings
from typing import Callable, Dict, List, Tuple

import numpy as np
from loguru import logger
from scipy.integrate import IntegrationWarning, quad

from src.exceptions import QuadratureError

ComplexIntegrand = Callable[[float], complex]


def complex_quad(
    func: ComplexIntegrand,
    a: float,
    b: float,
    epsabs: float,
    epsrel: float,
    limit: int,
) -> Tuple[complex, float]:
    """Adaptive QUADPACK integration of a complex integrand on [a, b] (b may be inf).

    Real and imaginary parts are integrated in that order; samples are memoised
    so the second pass reuses the first one's evaluations. When QUADPACK warns
    that it missed the requested tolerance, the reported error is raised to ten
    times that tolerance.
    """
    samples: Dict[float, complex] = {}

    def sample(y: float) -> complex:
        value = samples.get(y)
        if value is None:
            value = complex(func(y))
            samples[y] = value
        return value

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        real, real_err = quad(lambda y: sample(y).real, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
        imag, imag_err = quad(lambda y: sample(y).imag, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
    value = complex(real, imag)
    if not np.isfinite(value):
        raise QuadratureError("non-finite quadrature result", interval=[a, b])
    error = real_err + imag_err
    missed = [w for w in caught if issubclass(w.category, IntegrationWarning)]
    for warning in caught:
        level = "DEBUG" if warning in missed else "WARNING"
        logger.log(level, "quadrature on [{}, {}]: {}", a, b, str(warning.message).splitlines()[0])
    if missed:
        error = max(error, 10.0 * max(epsabs, epsrel * abs(value)))
    return value, error


def power_weighted_quad(
    func: ComplexIntegrand,
    s: complex,
    length: float,
    epsabs: float,
    epsrel: float,
    limit: int,
) -> Tuple[complex, float]:
    """Integral of func(y) y^(-s) over [0, length] for Re(s) < 1.

    For 0 < Re(s) < 1 the substitution y = length * u^(1/(1 - Re s)) removes the
    endpoint singularity and leaves the bounded phase u^(-i Im(s)/(1 - Re s)).
    """
    sigma, tau = s.real, s.imag
    if sigma >= 1.0:
        raise QuadratureError("power weight is not integrable at the origin", s=s)
    if sigma <= 0.0:
        return complex_quad(lambda y: func(y) * complex(y) ** (-s), 0.0, length, epsabs, epsrel, limit)
    power = 1.0 / (1.0 - sigma)
    scale = power * complex(length) ** (1.0 - s)

    def integrand(u: float) -> complex:
        return scale * func(length * u ** power) * complex(u) ** (-1j * tau * power)

    return complex_quad(integrand, 0.0, 1.0, epsabs, epsrel, limit)


def geometric_edges(start: float, stop: float, ratio: float = 10.0) -> List[float]:
    """Panel edges start, start*ratio, ... ending exactly at stop."""
    edges = [start]
    while edges[-1] * ratio < stop:
        edges.append(edges[-1] * ratio)
    edges.append(stop)
    return edges
