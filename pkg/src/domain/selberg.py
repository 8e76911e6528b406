from dataclasses import dataclass
from typing import Tuple

from src.exceptions import DomainError


@dataclass(frozen=True)
class ScatteringPole:
    q: complex
    b: int

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if self.b < 1:
            raise DomainError("scattering pole order b must be at least 1", b=self.b)


@dataclass(frozen=True)
class SelbergSpecOdd:
    """Divisor data of the Selberg zeta function in odd dimension d = 2n+1."""

    n: int
    k: int
    d_c_chi: int
    d_sigma_k: int
    e_dk: int
    a_k: float = 0.0
    scattering_poles: Tuple[ScatteringPole, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("odd case needs n >= 1", n=self.n)
        if not 0 <= self.k <= self.n:
            raise DomainError("odd case needs 0 <= k <= n", k=self.k, n=self.n)
        if self.d_c_chi < 0 or self.d_sigma_k < 1 or self.e_dk < 0:
            raise DomainError("need d_c >= 0, d(sigma_k) >= 1 and e(d,k) >= 0")

    @property
    def delta_kn(self) -> int:
        return int(self.k == self.n)


@dataclass(frozen=True)
class SelbergSpecEven:
    """Divisor data of the Selberg zeta function in even dimension d = 2n."""

    n: int
    k: int
    d_c_chi: int
    d_sigma_k: int
    d_dk: int
    dim_v_chi: int
    euler_char: int
    scattering_poles: Tuple[ScatteringPole, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("even case needs n >= 1", n=self.n)
        if not 0 <= self.k <= self.n - 1:
            raise DomainError("even case needs 0 <= k <= n-1", k=self.k, n=self.n)
        if self.d_dk < 0:
            raise DomainError("d(d,k) must be non-negative", d_dk=self.d_dk)
        if self.dim_v_chi < 1:
            raise DomainError("dim V_chi must be at least 1", dim_v_chi=self.dim_v_chi)

    @property
    def ve(self) -> int:
        return self.dim_v_chi * self.euler_char


@dataclass(frozen=True)
class KleinianParams:
    index_case: int
    c0_abs: float
    m_c0: int
    lattice_coarea: float

    def __post_init__(self):
        if self.index_case not in (1, 2):
            raise DomainError("only index cases 1 and 2 are supported", index_case=self.index_case)
        if not (self.c0_abs > 0 and self.lattice_coarea > 0 and self.m_c0 >= 1):
            raise DomainError("need |c0| > 0, |P| > 0 and m(c0) >= 1")
