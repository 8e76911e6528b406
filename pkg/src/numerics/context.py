from dataclasses import dataclass, replace
from typing import Any

from config.settings import (
    DERIVATIVE_STEP, QUADRATURE_NODES, SERIES_TRUNCATION, TARGET_REL_ERROR,
)
from src.exceptions import DomainError


@dataclass(frozen=True)
class EvalContext:
    """Precision, truncation and quadrature policy shared by every numeric operation."""

    target_rel_error: float = TARGET_REL_ERROR
    series_truncation: int = SERIES_TRUNCATION
    quadrature_nodes: int = QUADRATURE_NODES
    derivative_step: float = DERIVATIVE_STEP

    def __post_init__(self):
        if not self.target_rel_error > 0:
            raise DomainError("target_rel_error must be positive", value=self.target_rel_error)
        if self.series_truncation < 1:
            raise DomainError("series_truncation must be at least 1", value=self.series_truncation)
        if self.quadrature_nodes < 8:
            raise DomainError("quadrature_nodes must be at least 8", value=self.quadrature_nodes)
        if not self.derivative_step > 0:
            raise DomainError("derivative_step must be positive", value=self.derivative_step)

    def with_overrides(self, **overrides: Any) -> "EvalContext":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    @property
    def quad_limit(self) -> int:
        """Maximum number of adaptive subdivisions granted to a single quadrature call."""
        return 8 * self.quadrature_nodes


DEFAULT_CONTEXT = EvalContext()


def resolve_context(context: "EvalContext | None") -> EvalContext:
    return DEFAULT_CONTEXT if context is None else context
