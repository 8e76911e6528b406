"""Complex classical and multiple zeta/gamma functions.

All powers use the principal branch, w^(-s) = exp(-s log w) with arg w in (-pi, pi].
"""
import math
import threading
from functools import lru_cache
from typing import Tuple

import mpmath
import numpy as np
from loguru import logger
from scipy import special

from config.settings import EULER_MACLAURIN_SHIFT, EULER_MACLAURIN_TERMS
from src.exceptions import DomainError, IndexRangeError, PoleError
from src.numerics.context import EvalContext, resolve_context
from src.numerics.differentiation import richardson_derivative
from src.numerics.stirling import bernoulli_numbers, binom, stirling_table

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
DOUBLE_EPS = float(np.finfo(float).eps)
HURWITZ_MP_DPS = 25

_MP_LOCAL = threading.local()


def is_nonpositive_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and float(z.real).is_integer()


def _require_gamma_domain(z: complex, operation: str) -> None:
    if is_nonpositive_integer(z):
        raise PoleError(f"{operation}: argument is a pole of the gamma function", location=complex(z))


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z), continuous on the plane cut along the negative axis."""
    _require_gamma_domain(z, "log_gamma")
    return complex(special.loggamma(complex(z)))


def digamma(z: complex) -> complex:
    _require_gamma_domain(z, "digamma")
    return complex(special.psi(complex(z)))


def polygamma(k: int, z: complex, context: EvalContext = None) -> complex:
    """k-th derivative of the digamma function, via psi^(k)(z) = (-1)^(k+1) k! zeta_H(k+1, z)."""
    if k < 0:
        raise IndexRangeError("polygamma order must be non-negative", k=k)
    if k == 0:
        return digamma(z)
    _require_gamma_domain(z, "polygamma")
    return (-1) ** (k + 1) * math.factorial(k) * hurwitz_zeta(k + 1, z, context)


@lru_cache(maxsize=None)
def _euler_maclaurin_coefficients(terms: int) -> Tuple[float, ...]:
    """B_{2k} / (2k)! for k = 1..terms, rounded once from the exact values."""
    numbers = bernoulli_numbers(2 * terms)
    return tuple(float(numbers[2 * k] / math.factorial(2 * k)) for k in range(1, terms + 1))


def _mp_context():
    """Per-thread mpmath context; the global one changes precision while it works."""
    ctx = getattr(_MP_LOCAL, "ctx", None)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.dps = HURWITZ_MP_DPS
        _MP_LOCAL.ctx = ctx
    return ctx


def _hurwitz_zeta_mp(s: complex, z: complex) -> Tuple[complex, float]:
    ctx = _mp_context()
    a = ctx.mpf(z.real) if z.imag == 0.0 and z.real > 0.0 else ctx.mpc(z)
    value = complex(ctx.zeta(ctx.mpc(s), a))
    # the result carries HURWITZ_MP_DPS digits; only the rounding to double remains
    return value, 2.0 * DOUBLE_EPS * abs(value)


def hurwitz_zeta_with_error(s: complex, z: complex) -> Tuple[complex, float]:
    """Continuation of sum_{l>=0} (z+l)^(-s) with an error estimate.

    For Re(s) >= 0 the first N = ceil(20 + |s| - Re z) terms are summed
    directly and the rest is replaced by the integral, the midpoint correction
    and Bernoulli terms; the estimate adds the rounding of every summand to the
    last Bernoulli term. For Re(s) < 0 the head terms grow like N^(-s) and
    cancel, so the value comes from mpmath at extended precision.
    """
    s = complex(s)
    z = complex(z)
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1", location=s)
    if is_nonpositive_integer(z):
        raise DomainError("hurwitz_zeta: z is a non-positive integer", z=z)
    if s.real < 0.0:
        return _hurwitz_zeta_mp(s, z)

    shift = max(0, math.ceil(EULER_MACLAURIN_SHIFT + abs(s) - z.real))
    head_terms = np.power(z + np.arange(shift), -s) if shift else np.zeros(0, dtype=complex)
    head = complex(np.sum(head_terms))
    w = z + shift
    w_power = w ** (-s)
    integral = w * w_power / (s - 1.0)
    total = head + integral + 0.5 * w_power
    magnitude = float(np.sum(np.abs(head_terms))) + abs(integral) + abs(w_power)

    # (s)_{2k-1} w^(-s-2k+1), built incrementally
    rising = s
    term_power = w_power / w
    truncation = abs(w_power)
    for k, coefficient in enumerate(_euler_maclaurin_coefficients(EULER_MACLAURIN_TERMS), start=1):
        term = coefficient * rising * term_power
        total += term
        magnitude += abs(term)
        truncation = abs(term)
        if truncation <= 1e-17 * abs(total):
            break
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        term_power /= w * w
    # each power exp(-s log w) carries a relative rounding of about |s log w| ulps
    rounding = DOUBLE_EPS * (1.0 + abs(s) * abs(np.log(w)))
    return total, truncation + rounding * magnitude


def hurwitz_zeta(s: complex, z: complex, context: EvalContext = None) -> complex:
    value, error = hurwitz_zeta_with_error(s, z)
    target = resolve_context(context).target_rel_error
    if error > target * max(abs(value), 1e-300):
        logger.warning("hurwitz_zeta({}, {}) error estimate {:.2e} above target", s, z, error)
    return value


def hurwitz_zeta_ds(s0: complex, z: complex, context: EvalContext = None) -> complex:
    """Numerical s-derivative of the Hurwitz continuation at s0 (Richardson-extrapolated)."""
    ctx = resolve_context(context)
    if is_nonpositive_integer(z):
        raise DomainError("hurwitz_zeta: z is a non-positive integer", z=z)
    value, _ = richardson_derivative(lambda s: hurwitz_zeta(s, z, ctx), complex(s0), ctx.derivative_step)
    return value


def hurwitz_zeta_ds0(z: complex, context: EvalContext = None) -> complex:
    """d/ds zeta_H(s, z) at s = 0; compare with log Gamma(z) - log sqrt(2 pi)."""
    return hurwitz_zeta_ds(0.0, z, context)


def p_poly(m: int, j: int, z: complex) -> complex:
    """Polynomial p_{m,j}(z) of the reduction zeta_m(s, z) = sum_j p_{m,j}(z) zeta_H(s-j, z)."""
    if m < 1 or not 0 <= j <= m - 1:
        raise IndexRangeError("p_poly requires m >= 1 and 0 <= j <= m-1", m=m, j=j)
    table = stirling_table(m)
    z = complex(z)
    total = 0j
    for l in range(j, m):
        total += binom(l, j) * table.entry(m, l + 1) * z ** (l - j)
    return (-1) ** (m + 1 - j) * total / math.factorial(m - 1)


def multiple_hurwitz_zeta(m: int, s: complex, z: complex, context: EvalContext = None) -> complex:
    if m < 1:
        raise IndexRangeError("multiple_hurwitz_zeta requires m >= 1", m=m)
    s = complex(s)
    if s.imag == 0.0 and float(s.real).is_integer() and 1 <= s.real <= m:
        raise PoleError("multiple_hurwitz_zeta has a pole at s in {1..m}", location=s, m=m)
    if is_nonpositive_integer(z):
        raise DomainError("multiple_hurwitz_zeta: z is a non-positive integer", z=z)
    return sum(p_poly(m, j, z) * hurwitz_zeta(s - j, z, context) for j in range(m))


def log_multiple_gamma(m: int, z: complex, context: EvalContext = None) -> complex:
    """d/ds zeta_m(s, z) at s = 0 through the Hurwitz reduction."""
    if m < 1:
        raise IndexRangeError("multiple_gamma requires m >= 1", m=m)
    if is_nonpositive_integer(z):
        raise DomainError("multiple_gamma: z is a non-positive integer", z=z)
    return sum(p_poly(m, j, z) * hurwitz_zeta_ds(-j, z, context) for j in range(m))


def multiple_gamma(m: int, z: complex, context: EvalContext = None) -> complex:
    return complex(np.exp(log_multiple_gamma(m, z, context)))
