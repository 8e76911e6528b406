from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from src.domain.zeros import ZeroSequence
from src.exceptions import ConvergenceDomainError, DomainError
from src.models.base_model import FunctionModel
from src.numerics.context import EvalContext, resolve_context


@dataclass(frozen=True)
class DirichletLogSeries:
    """Terms (c_n, q_n) of log f(z) = sum_n c_n q_n^(-z), with 1 < q_1 < q_2 < ..."""

    terms: Tuple[Tuple[complex, float], ...]
    order_kappa: float
    abscissa_sigma: float

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((complex(c), float(q)) for c, q in self.terms))
        bases = [q for _, q in self.terms]
        if bases and bases[0] <= 1.0:
            raise DomainError("q_1 must exceed 1", q_1=bases[0])
        if any(later <= earlier for earlier, later in zip(bases, bases[1:])):
            raise DomainError("q_n must be strictly increasing")
        if self.order_kappa < 1:
            raise DomainError("order kappa must be at least 1", kappa=self.order_kappa)


class DirichletSeriesModel(FunctionModel):
    """Zeta-type function given by an explicit (finite) generalized Dirichlet series."""

    name = "dirichlet"

    def __init__(self, series: DirichletLogSeries, zero_oracle: Optional[ZeroSequence] = None):
        super().__init__(series.order_kappa, series.abscissa_sigma, zero_oracle)
        self.series = series
        self._c = np.array([c for c, _ in series.terms], dtype=complex)
        self._log_q = np.log(np.array([q for _, q in series.terms], dtype=float))

    def _depth(self, x: float, target: float, power: float) -> int:
        if x <= self.abscissa_sigma:
            raise ConvergenceDomainError("Re(z) must exceed the abscissa", x=x, sigma=self.abscissa_sigma)
        if self._c.size == 0:
            return 0
        weights = np.abs(self._c) * self._log_q ** power * np.exp(-x * self._log_q)
        # tails[N] bounds the terms with index > N (1-based)
        tails = np.append(np.cumsum(weights[::-1])[::-1], 0.0)
        below = np.nonzero(tails[1:] <= target)[0]
        return int(below[0]) + 1 if below.size else self._c.size

    def truncation_depth(self, x: float, target: float) -> int:
        return max(1, self._depth(x, target, 0))

    def _partial_sum(self, z: complex, power: int, context: EvalContext) -> complex:
        ctx = resolve_context(context)
        depth = self._depth(z.real, ctx.target_rel_error, power)
        c = self._c[:depth]
        log_q = self._log_q[:depth]
        return complex(np.sum(c * (-log_q) ** power * np.exp(-z * log_q)))

    def log_value(self, z: complex, context: EvalContext = None) -> complex:
        self.check_domain(z)
        return self._partial_sum(complex(z), 0, context)

    def _log_derivative(self, j: int, z: complex, context: EvalContext = None) -> complex:
        return self._partial_sum(z, j, context)

    def dirichlet_terms(self, x: float, target: float, power: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
        depth = self._depth(x, target, power)
        if depth == self._c.size:
            logger.debug("dirichlet series used in full ({} terms)", depth)
        return self._c[:depth], self._log_q[:depth]
