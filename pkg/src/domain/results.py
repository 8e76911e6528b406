from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass(frozen=True)
class SuperzetaResult:
    value: complex
    est_error: float
    branch_flags: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "est_error", abs(float(self.est_error)))


@dataclass(frozen=True)
class KleinianConstants:
    det_prefactor_plus: complex
    det_prefactor_minus: complex
    phi_quotient_prefactor: complex
    phi_quotient_prefactor_as_printed: complex


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    suite: str
    name: str
    measured: float
    tolerance: float
    passed: bool
