import math
from dataclasses import dataclass
from typing import Optional, Tuple

from src.domain.divisor import DivisorFamily, DivisorPoint
from src.exceptions import DomainError


@dataclass(frozen=True)
class VerticalLattice:
    """Points center + i*spacing*k for every integer k, all of the same order."""

    center: complex
    spacing: float
    order: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not self.spacing > 0:
            raise DomainError("lattice spacing must be positive", spacing=self.spacing)

    def admits(self, z: complex) -> bool:
        w = complex(z) - self.center
        if w.real > 0.0:
            return True
        return not float(w.imag / self.spacing).is_integer()


@dataclass(frozen=True)
class ZeroSequence:
    """Zeros (and poles, with negative orders) of a function used for direct superzeta sums."""

    families: Tuple[DivisorFamily, ...] = ()
    lattices: Tuple[VerticalLattice, ...] = ()
    kappa: Optional[float] = None

    @classmethod
    def of_points(cls, points, kappa: Optional[float] = None) -> "ZeroSequence":
        return cls(families=(DivisorFamily.finite(DivisorPoint(*p) for p in points),), kappa=kappa)

    @classmethod
    def dirichlet_polynomial_zeros(cls, base: float) -> "ZeroSequence":
        """Zeros 2*pi*i*k/log(base) of 1 - base^(-z)."""
        return cls(lattices=(VerticalLattice(0j, 2.0 * math.pi / math.log(base)),), kappa=1.0)

    @property
    def is_empty(self) -> bool:
        return not self.lattices and all(
            family.kind == "finite" and not family.points for family in self.families
        )

    def admits(self, z: complex) -> bool:
        return all(f.admits(z) for f in self.families) and all(l.admits(z) for l in self.lattices)
