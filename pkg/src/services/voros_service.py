"""Continuation of a superzeta function from an asymptotic expansion of log Delta_f.

For Re(s) < m + 1 the superzeta function splits into a polynomial-log block,
a block of power terms a_k z^(mu_k) and a remainder integral of the
(m+1)-th derivative of what the expansion leaves over.
"""
import cmath
import math
from typing import Callable, Optional, Tuple, Union

import numpy as np
from loguru import logger
from scipy import special

from src.domain.divisor import DivisorFamily
from src.domain.expansion import AsymptoticExpansion, HadamardData, harmonic_number
from src.domain.results import SuperzetaResult
from src.domain.zeros import ZeroSequence
from src.exceptions import (
    AdmissibilityError, ConvergenceDomainError, DomainError, IndexRangeError, PoleError, SectorError,
)
from src.numerics.context import EvalContext, resolve_context
from src.numerics.differentiation import richardson_derivative
from src.numerics.quadrature import complex_quad, geometric_edges, power_weighted_quad
from src.numerics.stirling import bernoulli_numbers
from src.services.superzeta_service import SuperzetaService

REMAINDER_YMAX_CAP = 1e8
DEFAULT_FIXTURE_TERMS = 6


def gamma_ratio(s: complex, j: int) -> complex:
    """Gamma(s-j)/Gamma(s) = prod_{i=1..j} 1/(s-i)."""
    if j < 0:
        raise IndexRangeError("gamma_ratio needs j >= 0", j=j)
    s = complex(s)
    value = 1.0 + 0j
    for i in range(1, j + 1):
        if s == i:
            raise PoleError("Gamma(s-j)/Gamma(s) has a pole at s in {1..j}", location=s, j=j)
        value /= s - i
    return value


def gamma_ratio_ds0(j: int) -> float:
    """d/ds Gamma(s-j)/Gamma(s) at s = 0, equal to H_j (-1)^j / j!."""
    if j < 0:
        raise IndexRangeError("gamma_ratio_ds0 needs j >= 0", j=j)
    return float(harmonic_number(j)) * (-1) ** j / math.factorial(j)


def power_term_ratio(s: complex, mu: float) -> complex:
    """Gamma(s - mu) / (Gamma(s) Gamma(-mu)), zero at s = 0."""
    s = complex(s)
    p = -mu
    if float(p).is_integer():
        p = int(p)
        if p == 0:
            return 0j
        rising = 1.0 + 0j
        for i in range(p):
            rising *= s + i
        return rising / math.factorial(p - 1)
    w = s - mu
    if w.imag == 0.0 and w.real <= 0.0 and float(w.real).is_integer():
        raise PoleError("power term block has a pole at s = mu - l", location=s, mu=mu)
    return complex(special.gamma(w)) * complex(special.rgamma(s)) * float(special.rgamma(p))


def _falling(mu: float, order: int) -> float:
    value = 1.0
    for i in range(order):
        value *= mu - i
    return value


class VorosService:
    """Superzeta functions and determinants from an AsymptoticExpansion and Hadamard data."""

    def __init__(self, context: EvalContext = None):
        self.context = resolve_context(context)
        self.superzeta = SuperzetaService(self.context)

    def hadamard_log_derivative(self, data: HadamardData, order: int, z: complex) -> complex:
        """(log Delta_f)^(m+1)(z) = (-1)^m m! [sum_k (z - y_k)^(-(m+1)) + r z^(-(m+1))]."""
        m = data.m
        if order != m + 1:
            raise IndexRangeError("hadamard_log_derivative is defined for order m+1", order=order, m=m)
        z = complex(z)
        total = 0j
        if not data.zeros.is_empty:
            total += self.superzeta.superzeta_direct(data.zeros, m + 1, z).value
        if data.r:
            if z == 0:
                raise AdmissibilityError("z coincides with the zero at the origin", z=z)
            total += data.r * z ** (-(m + 1))
        return (-1) ** m * math.factorial(m) * total

    def _remainder_derivative(
        self, expansion: AsymptoticExpansion, data: HadamardData, k0: int, w: complex
    ) -> complex:
        m = expansion.m
        value = self.hadamard_log_derivative(data, m + 1, w)
        for j, a in enumerate(expansion.a_tilde):
            if a:
                value -= a * (-1) ** (m - j) * math.factorial(j) * math.factorial(m - j) * w ** (j - m - 1)
        for a, mu in expansion.power_terms[: k0 - 1]:
            value -= a * _falling(mu, m + 1) * w ** (mu - m - 1)
        return value

    @staticmethod
    def _check_sector(expansion: AsymptoticExpansion, z: complex) -> None:
        if z == 0 or abs(cmath.phase(z)) >= expansion.sector_theta:
            raise SectorError("z lies outside the sector of the expansion", z=z, theta=expansion.sector_theta)

    @staticmethod
    def _choose_k0(expansion: AsymptoticExpansion, s: complex, k0: Optional[int]) -> int:
        exponents = [mu for _, mu in expansion.power_terms]
        if k0 is None:
            for index, mu in enumerate(exponents, start=1):
                if mu < s.real - 1.0:
                    return index
            raise DomainError("the expansion has no power term with mu_k < Re(s) - 1", s=s)
        if not 1 <= k0 <= len(exponents) or not exponents[k0 - 1] < s.real - 1.0:
            raise DomainError("k0 must index a power term with mu_k0 < Re(s) - 1", k0=k0, s=s)
        return k0

    def _remainder_extent(self, expansion: AsymptoticExpansion, k0: int, s: complex, z: complex) -> float:
        """Y_max where the neglected part of the tail, C (1+|z|)^2 Y^(mu-sigma-1), drops below target."""
        a, mu = expansion.power_terms[k0 - 1]
        sigma = s.real
        bound = max(abs(a * _falling(mu, expansion.m + 1)), 1e-300) * (1.0 + abs(z)) ** 2
        target = self.context.target_rel_error
        extent = (target * (sigma - mu + 1.0) / bound) ** (1.0 / (mu - sigma - 1.0))
        return float(min(max(extent, 10.0 * abs(z) + 10.0), REMAINDER_YMAX_CAP))

    @staticmethod
    def _remainder_tail(expansion: AsymptoticExpansion, k0: int, s: complex, z: complex, y_max: float) -> complex:
        """Integral over [Y_max, inf) of the leading k0-th term, expanded to first order in z/y."""
        a, mu = expansion.power_terms[k0 - 1]
        p = mu - expansion.m - 1
        scale = a * _falling(mu, expansion.m + 1) * y_max ** (mu - s)
        return scale * (1.0 / (s - mu) + p * z / (y_max * (s - mu + 1.0)))

    def voros_superzeta(
        self,
        expansion: AsymptoticExpansion,
        data: HadamardData,
        s: complex,
        z: complex,
        k0: Optional[int] = None,
    ) -> SuperzetaResult:
        s, z = complex(s), complex(z)
        m = expansion.m
        if data.m != m:
            raise DomainError("expansion and Hadamard data disagree on the genus", m=m, hadamard_m=data.m)
        if s.real >= m + 1:
            raise ConvergenceDomainError("the continuation holds for Re(s) < m+1", s=s, m=m)
        self._check_sector(expansion, z)
        if not data.zeros.admits(z):
            raise AdmissibilityError("z is not admissible for the Hadamard zeros", z=z)
        k0 = self._choose_k0(expansion, s, k0)

        polylog_block = 0j
        for j, a in enumerate(expansion.a_tilde):
            if a:
                polylog_block += (-1) ** j * math.factorial(j) * a * gamma_ratio(s, j) * z ** (j - s)

        power_block = 0j
        for a, mu in expansion.power_terms[: k0 - 1]:
            power_block -= a * power_term_ratio(s, mu) * z ** (mu - s)

        flags = {"k0": k0}
        prefactor = (-1) ** m * complex(special.rgamma(m + 1 - s)) * complex(special.rgamma(s))
        remainder, error = 0j, 0.0
        if prefactor != 0:
            y_max = self._remainder_extent(expansion, k0, s, z)
            flags["y_max"] = y_max
            logger.debug("voros remainder s={} z={} k0={} Y_max={:.3g}", s, z, k0, y_max)

            def integrand(y: float) -> complex:
                return self._remainder_derivative(expansion, data, k0, z + y)

            target = self.context.target_rel_error
            limit = self.context.quad_limit
            edges = geometric_edges(1.0, y_max)
            value, panel_error = power_weighted_quad(integrand, s - m, 1.0, 0.1 * target, target, limit)
            remainder += value
            error += panel_error
            for left, right in zip(edges, edges[1:]):
                value, panel_error = complex_quad(
                    lambda y: integrand(y) * complex(y) ** (m - s), left, right, 0.1 * target, target, limit
                )
                remainder += value
                error += panel_error
            remainder += self._remainder_tail(expansion, k0, s, z, y_max)
            remainder *= prefactor
            error = abs(prefactor) * (error + target)
        else:
            flags["remainder"] = "vanishes"

        value = polylog_block + power_block + remainder
        return SuperzetaResult(value, error + 1e-15 * abs(value), flags)

    def voros_det(
        self,
        expansion: AsymptoticExpansion,
        delta_f: Union[Callable[[complex], complex], complex],
        z: complex,
    ) -> complex:
        """D_f(z) = exp(-sum_j b_j z^j) Delta_f(z)."""
        z = complex(z)
        delta = delta_f(z) if callable(delta_f) else complex(delta_f)
        polynomial = sum(b * z ** j for j, b in enumerate(expansion.b))
        return complex(np.exp(-polynomial)) * delta

    def voros_log_det(self, expansion: AsymptoticExpansion, data: HadamardData, z: complex) -> complex:
        """log D_f(z) = -d/ds voros_superzeta at s = 0, by Richardson-extrapolated differences."""
        value, error = richardson_derivative(
            lambda s: self.voros_superzeta(expansion, data, s, z).value,
            0j, self.context.derivative_step,
        )
        logger.debug("voros log det z={} derivative error {:.1e}", z, error)
        return -value


def reciprocal_gamma_expansion(terms: int = DEFAULT_FIXTURE_TERMS) -> Tuple[AsymptoticExpansion, HadamardData]:
    """Stirling series of log(1/Gamma) in the rearranged form, with zeros at 0, -1, -2, ..."""
    if terms < 1:
        raise IndexRangeError("the fixture needs at least one power term", terms=terms)
    bernoulli = bernoulli_numbers(2 * terms)
    power_terms = tuple(
        (-float(bernoulli[2 * k] / (2 * k * (2 * k - 1))), 1.0 - 2 * k) for k in range(1, terms + 1)
    )
    expansion = AsymptoticExpansion(
        m=1,
        a_tilde=(0.5, -1.0),
        b=(-0.5 * math.log(2.0 * math.pi), 0.0),
        power_terms=power_terms,
        sector_theta=3.0,
    )
    zeros = ZeroSequence(families=(DivisorFamily.progression(-1.0),), kappa=1.0)
    return expansion, HadamardData(zeros=zeros, m=1, r=1)


def reciprocal_gamma_delta(z: complex) -> complex:
    return complex(special.rgamma(complex(z)))
