import cmath
import math
from typing import Tuple

import numpy as np

from src.domain.divisor import DivisorFamily
from src.domain.zeros import ZeroSequence
from src.exceptions import ConvergenceDomainError, DomainError, PoleError
from src.models.base_model import FunctionModel
from src.numerics.context import EvalContext
from src.numerics.special_functions import digamma, is_nonpositive_integer, log_gamma, polygamma
from src.numerics.stirling import eulerian_numbers


def negative_polylog(k: int, u: complex) -> complex:
    """Li_{-k}(u) = sum_n n^k u^n for |u| < 1, in Eulerian-number closed form."""
    if k == 0:
        return u / (1.0 - u)
    numerator = sum(a * u ** (i + 1) for i, a in enumerate(eulerian_numbers(k)))
    return numerator / (1.0 - u) ** (k + 1)


class DirichletPolynomialModel(FunctionModel):
    """f(z) = 1 - a^(-z); log f = -sum_n a^(-nz)/n for Re z > 0."""

    name = "dirichlet-polynomial"

    def __init__(self, base: float = 2.0):
        if not base > 1.0:
            raise DomainError("dirichlet-polynomial needs a > 1", a=base)
        super().__init__(1.0, 0.0, ZeroSequence.dirichlet_polynomial_zeros(base))
        self.base = float(base)
        self.log_base = math.log(base)

    def _u(self, z: complex) -> complex:
        return cmath.exp(-z * self.log_base)

    def log_value(self, z: complex, context: EvalContext = None) -> complex:
        self.check_domain(z)
        return complex(np.log1p(-self._u(complex(z))))

    def _log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        # (log f)^(j) = -(-log a)^j Li_{1-j}(a^(-z))
        return -((-self.log_base) ** j) * negative_polylog(j - 1, self._u(z))

    def truncation_depth(self, x: float, target: float) -> int:
        """Smallest N >= 1 with a^(-x(N+1)) <= target."""
        if x <= 0.0:
            raise ConvergenceDomainError("dirichlet-polynomial needs x > 0", x=x)
        if target >= 1.0:
            return 1
        return max(1, math.ceil(math.log(1.0 / target) / (x * self.log_base)) - 1)

    def _tail_depth(self, x: float, target: float, power: float) -> int:
        """Smallest N with sum_{n>N} (n log a)^power a^(-nx)/n <= target, by a geometric tail bound."""
        if x <= 0.0:
            raise ConvergenceDomainError("dirichlet-polynomial needs x > 0", x=x)
        decay = math.exp(-x * self.log_base)
        n = 1
        while True:
            # for power < 1 the term ratios increase towards decay
            growth = ((n + 2) / (n + 1)) ** (power - 1.0) if power >= 1.0 else 1.0
            ratio = growth * decay
            if ratio < 1.0:
                head = (n + 1) ** (power - 1.0) * self.log_base ** power * decay ** (n + 1)
                if head / (1.0 - ratio) <= target:
                    return n
            n += 1

    def dirichlet_terms(self, x: float, target: float, power: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
        n = np.arange(1, self._tail_depth(x, target, power) + 1, dtype=float)
        return -1.0 / n + 0j, n * self.log_base

    def analytic_radius(self, z: complex) -> float:
        return complex(z).real


class ReciprocalGammaModel(FunctionModel):
    """f = 1/Gamma, zeros at 0, -1, -2, ...

    Its Mellin kernel is log w - psi(w) with singular part z^(1-s)/(s-1), which
    represents zeta_H(s, z) for 0 < Re(s) < 1.
    """

    name = "reciprocal-gamma"
    is_zeta_type = False
    kernel_decay_power = 1.0

    def __init__(self):
        super().__init__(1.0, None, ZeroSequence(families=(DivisorFamily.progression(0j),), kappa=1.0))

    def check_domain(self, z: complex) -> None:
        if is_nonpositive_integer(z):
            raise DomainError("reciprocal-gamma: log f is singular at non-positive integers", z=complex(z))

    def log_value(self, z: complex, context: EvalContext = None) -> complex:
        self.check_domain(z)
        return -log_gamma(z)

    def _log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        if j == 1:
            return -digamma(z)
        return -polygamma(j - 1, z, context)

    def kernel(self, w: complex, context: EvalContext = None) -> complex:
        return self.kernel_derivative(0, w, context)

    def kernel_derivative(self, k: int, w: complex, context: EvalContext = None) -> complex:
        w = complex(w)
        if not self.zero_oracle.admits(w):
            raise DomainError("reciprocal-gamma kernel evaluated on the cut", w=w)
        if k == 0:
            return cmath.log(w) - digamma(w)
        return (-1) ** (k - 1) * math.factorial(k - 1) * w ** (-k) - polygamma(k, w, context)

    def singular_part(self, s: complex, z: complex) -> complex:
        if s == 1:
            raise PoleError("reciprocal-gamma superzeta has a pole at s = 1", location=complex(s))
        return complex(z) ** (1.0 - s) / (s - 1.0)

    def analytic_radius(self, z: complex) -> float:
        z = complex(z)
        if z.real >= 0.0:
            return abs(z)
        nearest = max(0, round(-z.real))
        # the principal log in the kernel is cut along the negative axis
        return min([abs(z.imag)] + [abs(z + l) for l in (max(0, nearest - 1), nearest, nearest + 1)])


class SineQuotientModel(FunctionModel):
    """f(z) = sin(pi z)/pi = 1/(Gamma(z) Gamma(1-z)); zeros at every integer."""

    name = "sine-quotient"
    is_zeta_type = False
    has_mellin_kernel = False

    def __init__(self):
        super().__init__(1.0, None, None)

    def check_domain(self, z: complex) -> None:
        z = complex(z)
        if z.imag == 0.0 and float(z.real).is_integer():
            raise DomainError("sine-quotient: log f is singular at the integers", z=z)

    def log_value(self, z: complex, context: EvalContext = None) -> complex:
        self.check_domain(z)
        z = complex(z)
        return -log_gamma(z) - log_gamma(1.0 - z)

    def _log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        # (log f)' = psi(1-z) - psi(z) = pi cot(pi z)
        return -polygamma(j - 1, z, context) + (-1) ** (j - 1) * polygamma(j - 1, 1.0 - z, context)

    def admissible(self, z: complex) -> bool:
        return complex(z).imag != 0.0
