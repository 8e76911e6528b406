from typing import Any, Dict, Optional


class SuperzetaError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 2

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def diagnostic(self) -> Dict[str, Any]:
        """One-line machine-readable description used by the CLI."""
        payload: Dict[str, Any] = {
            "error": type(self).__name__,
            "exit_code": self.exit_code,
            "message": self.message,
        }
        for key, value in self.details.items():
            payload[key] = _jsonable(value)
        return payload


class InputParseError(SuperzetaError):
    exit_code = 1


class DomainError(SuperzetaError):
    exit_code = 2


class ConvergenceDomainError(DomainError):
    """Raised when Re(z) is not to the right of the absolute-convergence abscissa."""


class AdmissibilityError(DomainError):
    """Raised when z - rho falls on the cut (-inf, 0] for some divisor point rho."""


class SectorError(DomainError):
    pass


class BranchCutError(DomainError):
    pass


class IndexRangeError(DomainError):
    pass


class NoClosedFormError(DomainError):
    pass


class PoleError(SuperzetaError):
    exit_code = 2

    def __init__(self, message: str, location: Optional[complex] = None, **details: Any):
        super().__init__(message, location=location, **details)
        self.location = location


class QuadratureError(SuperzetaError):
    exit_code = 3


class AccuracyError(SuperzetaError):
    exit_code = 3


def _jsonable(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value
