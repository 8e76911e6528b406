import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.domain.zeros import ZeroSequence
from src.exceptions import DomainError


def harmonic_number(j: int) -> Fraction:
    """H_0 = 0, H_j = 1 + 1/2 + ... + 1/j."""
    return sum((Fraction(1, l) for l in range(1, j + 1)), Fraction(0))


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Large-|z| expansion of log Delta_f(z) in the sector |arg z| < sector_theta:

    sum_j a_tilde[j] z^j (log z - H_j) + sum_j b[j] z^j + sum_k a_k z^(mu_k).
    """

    m: int
    a_tilde: Tuple[complex, ...]
    b: Tuple[complex, ...]
    power_terms: Tuple[Tuple[complex, float], ...]
    sector_theta: float

    def __post_init__(self):
        object.__setattr__(self, "a_tilde", tuple(complex(a) for a in self.a_tilde))
        object.__setattr__(self, "b", tuple(complex(b) for b in self.b))
        object.__setattr__(
            self, "power_terms", tuple((complex(a), float(mu)) for a, mu in self.power_terms)
        )
        if self.m < 0:
            raise DomainError("expansion genus m must be non-negative", m=self.m)
        if len(self.a_tilde) != self.m + 1 or len(self.b) != self.m + 1:
            raise DomainError("a_tilde and b need m+1 coefficients each", m=self.m)
        exponents = [mu for _, mu in self.power_terms]
        if exponents and exponents[0] >= 1.0:
            raise DomainError("power exponents must stay below 1", mu_1=exponents[0])
        if any(later >= earlier for earlier, later in zip(exponents, exponents[1:])):
            raise DomainError("power exponents must be strictly decreasing", exponents=exponents)
        if not 0.0 < self.sector_theta < math.pi:
            raise DomainError("sector_theta must lie in (0, pi)", sector_theta=self.sector_theta)

    def harmonic(self, j: int) -> float:
        return float(harmonic_number(j))


@dataclass(frozen=True)
class HadamardData:
    """Zeros y_k of the Hadamard product, the order r of the zero at the origin and the genus m."""

    zeros: ZeroSequence
    m: int
    r: int = 0

    def __post_init__(self):
        if self.r < 0:
            raise DomainError("zero order at the origin must be non-negative", r=self.r)
        if self.m < 0:
            raise DomainError("genus must be non-negative", m=self.m)
