from abc import ABC, abstractmethod
from typing import Optional, Tuple

import numpy as np

from config.settings import MAX_DERIVATIVE_ORDER
from src.domain.zeros import ZeroSequence
from src.exceptions import ConvergenceDomainError, DomainError, IndexRangeError
from src.numerics.context import EvalContext


class FunctionModel(ABC):
    """A meromorphic function f known through log f and its derivatives.

    Besides log f, a model describes the Mellin kernel used by the integral
    representation of its superzeta function: for zeta-type models the kernel
    is f'/f itself and the singular part vanishes.
    """

    name: str = "model"
    is_zeta_type: bool = True
    has_mellin_kernel: bool = True
    # None means the kernel decays exponentially along z + [0, inf)
    kernel_decay_power: Optional[float] = None

    def __init__(
        self,
        order_kappa: float,
        abscissa_sigma: Optional[float],
        zero_oracle: Optional[ZeroSequence] = None,
    ):
        if order_kappa < 1:
            raise DomainError("order kappa must be at least 1", kappa=order_kappa)
        self.order_kappa = float(order_kappa)
        self.abscissa_sigma = abscissa_sigma
        self.zero_oracle = zero_oracle

    def check_domain(self, z: complex) -> None:
        """Raise when z is outside the half-plane where log f is represented."""
        if self.abscissa_sigma is not None and complex(z).real <= self.abscissa_sigma:
            raise ConvergenceDomainError(
                f"{self.name}: Re(z) must exceed the abscissa",
                z=complex(z), sigma=self.abscissa_sigma,
            )

    @abstractmethod
    def log_value(self, z: complex, context: EvalContext = None) -> complex:
        """Value of log f(z)."""
        pass

    @abstractmethod
    def _log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        pass

    def log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        """j-th derivative of log f at z, 1 <= j <= MAX_DERIVATIVE_ORDER."""
        if not 1 <= j <= MAX_DERIVATIVE_ORDER:
            raise IndexRangeError(
                "derivative order out of range", j=j, max_order=MAX_DERIVATIVE_ORDER
            )
        self.check_domain(z)
        return self._log_derivative(j, complex(z), context)

    def value(self, z: complex, context: EvalContext = None) -> complex:
        return complex(np.exp(self.log_value(z, context)))

    def truncation_depth(self, x: float, target: float) -> int:
        """Closed-form models need no truncation."""
        if self.abscissa_sigma is not None and x <= self.abscissa_sigma:
            raise ConvergenceDomainError(f"{self.name}: x must exceed the abscissa", x=x)
        return 1

    def dirichlet_terms(self, x: float, target: float, power: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
        """Coefficients c_n and log q_n of log f = sum c_n q_n^(-z).

        Truncated so that the neglected |c_n| (log q_n)^power q_n^(-x) sum to at most target.
        """
        raise DomainError(f"{self.name} has no Dirichlet series representation")

    def admissible(self, z: complex) -> bool:
        """Heuristic when no zero oracle is attached: every zero lies left of the abscissa."""
        if self.zero_oracle is not None:
            return self.zero_oracle.admits(z)
        if self.abscissa_sigma is None:
            return True
        return complex(z).real > self.abscissa_sigma

    def analytic_radius(self, z: complex) -> float:
        """Lower bound for the distance from z to the nearest singularity of the kernel."""
        if self.abscissa_sigma is None:
            raise DomainError(f"{self.name} needs an explicit analytic radius")
        return complex(z).real - self.abscissa_sigma

    def kernel(self, w: complex, context: EvalContext = None) -> complex:
        return self.log_derivative(1, w, context)

    def kernel_derivative(self, k: int, w: complex, context: EvalContext = None) -> complex:
        """k-th derivative of the kernel; k = 0 is the kernel itself."""
        return self.log_derivative(k + 1, w, context)

    def singular_part(self, s: complex, z: complex) -> complex:
        return 0j

    def __repr__(self) -> str:
        return f"{type(self).__name__}(kappa={self.order_kappa}, sigma={self.abscissa_sigma})"
