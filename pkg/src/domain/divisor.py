from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple

from src.exceptions import DomainError


def on_cut(w: complex) -> bool:
    """True when w lies on the branch cut (-inf, 0] of the principal logarithm."""
    w = complex(w)
    return w.imag == 0.0 and w.real <= 0.0


@dataclass(frozen=True)
class DivisorPoint:
    """A zero (positive order) or pole (negative order) at a point of the plane.

    Orders are real so that the half-integer data of Selberg divisors fit.
    """

    location: complex
    order: float

    def __post_init__(self):
        object.__setattr__(self, "location", complex(self.location))
        if self.order == 0:
            raise DomainError("divisor point order must be non-zero", location=self.location)

    def admits(self, z: complex) -> bool:
        return not on_cut(complex(z) - self.location)


@dataclass(frozen=True)
class DivisorFamily:
    """Either a finite list of points or a unit-step progression start, start-1, start-2, ...

    A progression with `multiple=m` weights its l-th point by C(m+l-1, l);
    `multiple=None` is the constant weight.
    """

    kind: str
    points: Tuple[DivisorPoint, ...] = ()
    start: complex = 0j
    order: float = 0.0
    multiple: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "start", complex(self.start))
        if self.kind not in ("finite", "progression"):
            raise DomainError("unknown divisor family kind", kind=self.kind)
        if self.kind == "progression":
            if self.order == 0:
                raise DomainError("progression order must be non-zero", start=self.start)
            if self.multiple is not None and self.multiple < 1:
                raise DomainError("multiple weight needs m >= 1", multiple=self.multiple)

    @classmethod
    def finite(cls, points) -> "DivisorFamily":
        return cls(kind="finite", points=tuple(points))

    @classmethod
    def progression(cls, start: complex, order: float = 1, multiple: Optional[int] = None) -> "DivisorFamily":
        return cls(kind="progression", start=start, order=order, multiple=multiple)

    @property
    def has_closed_form(self) -> bool:
        return self.kind == "progression"

    def admits(self, z: complex) -> bool:
        z = complex(z)
        if self.kind == "finite":
            return all(point.admits(z) for point in self.points)
        w = z - self.start
        return w.imag != 0.0 or w.real > 0.0


@dataclass(frozen=True)
class LabeledDivisor:
    nontrivial: Tuple[DivisorFamily, ...] = ()
    trivial: Tuple[DivisorFamily, ...] = ()
    poles: Tuple[DivisorFamily, ...] = field(default=())

    def families(self) -> Iterator[DivisorFamily]:
        yield from self.nontrivial
        yield from self.trivial
        yield from self.poles
