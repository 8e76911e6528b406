import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger
from scipy import special

from config.settings import CAUCHY_NODES, MAX_DERIVATIVE_ORDER, RESIDUE_CONTOUR_RADIUS, SPLIT_POINT
from src.domain.results import SuperzetaResult
from src.domain.zeros import VerticalLattice, ZeroSequence
from src.exceptions import (
    AdmissibilityError, ConvergenceDomainError, DomainError, IndexRangeError, QuadratureError,
)
from src.models.base_model import FunctionModel
from src.numerics.context import EvalContext, resolve_context
from src.numerics.differentiation import contour_residue, richardson_derivative
from src.numerics.quadrature import complex_quad, power_weighted_quad
from src.numerics.special_functions import DOUBLE_EPS, hurwitz_zeta
from src.services.divisor_service import divisor_superzeta

# Laurent window around s in N inside which a result is flagged as a removable pole
REMOVABLE_POLE_WINDOW = 1e-3
PAIR_TAIL_TERMS = 12


def _sinc(x: complex) -> complex:
    """sin(pi x)/(pi x), exactly zero at the nonzero integers."""
    if x.imag == 0.0 and float(x.real).is_integer():
        return 1.0 + 0j if x.real == 0.0 else 0j
    return complex(np.sinc(x))


def _power_integral(a: float, b: float, sigma: float) -> float:
    """int_a^b y^(-sigma) dy for 0 <= a < b, finite whenever a > 0 or sigma < 1."""
    if a <= 0.0:
        return b ** (1.0 - sigma) / (1.0 - sigma)
    if abs(1.0 - sigma) < 1e-12:
        return math.log(b / a)
    return (b ** (1.0 - sigma) - a ** (1.0 - sigma)) / (1.0 - sigma)


@dataclass
class MellinSplit:
    """Pieces of I(s, z) = int_0^inf K(z+y) y^(-s) dy after subtracting n Taylor terms of K at z."""

    s: complex
    taylor_terms: int
    delta: float
    y1: float
    coefficients: List[complex]
    inner: complex
    near: complex
    far: complex
    error: float
    flags: Dict[str, Any] = field(default_factory=dict)

    def polar_terms(self) -> List[complex]:
        """c_j delta^(j-s)/(j-s) for j = 1..n, the part of I(s, z) with poles at s = j."""
        return [c * self.delta ** (j - self.s) / (j - self.s) for j, c in enumerate(self.coefficients, start=1)]

    def regular_part(self) -> complex:
        return self.inner + self.near + self.far

    def integral(self) -> complex:
        return sum(self.polar_terms(), 0j) + self.regular_part()

    def _sinc_terms(self) -> List[complex]:
        s = self.s
        return [
            c * self.delta ** (j - s) * (-1) ** (j + 1) * _sinc(s - j)
            for j, c in enumerate(self.coefficients, start=1)
        ]

    def superzeta(self) -> complex:
        """sin(pi s)/pi * I(s, z) with the bracket poles cancelled through sinc."""
        return sum(self._sinc_terms(), 0j) + cmath.sin(math.pi * self.s) / math.pi * self.regular_part()

    def superzeta_error(self) -> float:
        factor = abs(cmath.sin(math.pi * self.s) / math.pi)
        rounding = DOUBLE_EPS * (sum(abs(t) for t in self._sinc_terms()) + factor * abs(self.regular_part()))
        return factor * self.error + 4.0 * rounding


class SuperzetaService:
    """Superzeta functions of a FunctionModel or of an explicit zero sequence."""

    def __init__(self, context: EvalContext = None):
        self.context = resolve_context(context)

    def _tolerances(self) -> Tuple[float, float]:
        target = self.context.target_rel_error
        return 0.1 * target, max(0.1 * target, 1e-13)

    def _check_error(self, result: SuperzetaResult, operation: str) -> SuperzetaResult:
        allowed = 100.0 * self.context.target_rel_error * max(1.0, abs(result.value))
        if result.est_error > allowed:
            raise QuadratureError(
                f"{operation}: estimated error exceeds 100x target",
                est_error=result.est_error, allowed=allowed, flags=str(result.branch_flags),
            )
        return result

    # direct sums

    def _lattice_sum(self, lattice: VerticalLattice, s: complex, z: complex) -> Tuple[complex, float]:
        """Sum over |k| <= K plus the symmetric-pair expansion of the |k| > K tail."""
        depth = self.context.series_truncation
        w = z - lattice.center
        omega = lattice.spacing
        k = np.arange(-depth, depth + 1, dtype=float)
        head = complex(np.sum(np.power(w - 1j * omega * k, -s)))

        tail = 0j
        binomial = 1.0 + 0j
        term_error = 0.0
        for r in range(PAIR_TAIL_TERMS):
            if r:
                binomial *= (-s - r + 1) / r
            term = (
                2.0 * cmath.cos(math.pi * (s + r) / 2.0) * binomial * w ** r
                * omega ** (-s - r) * hurwitz_zeta(s + r, depth + 1, self.context)
            )
            tail += term
            term_error = abs(term)
            if term_error <= 1e-17 * abs(tail):
                break
        roundoff = 1e-16 * math.sqrt(2 * depth + 1) * abs(w - 1j * omega * depth) ** (-s.real) * depth
        return lattice.order * (head + tail), abs(lattice.order) * (term_error + roundoff)

    def superzeta_direct(self, zeros: ZeroSequence, s: complex, z: complex) -> SuperzetaResult:
        """Sum of ord(rho) (z - rho)^(-s) over the zero sequence."""
        s, z = complex(s), complex(z)
        if zeros.kappa is not None and s.real <= zeros.kappa:
            raise ConvergenceDomainError("direct sums need Re(s) > kappa", s=s, kappa=zeros.kappa)
        if zeros.lattices and s.real <= 1.0:
            raise ConvergenceDomainError("lattice sums need Re(s) > 1", s=s)
        if not zeros.admits(z):
            raise AdmissibilityError("z - rho meets the cut for some zero", z=z)
        if zeros.is_empty:
            return SuperzetaResult(0j, 0.0, {"terms": 0})

        value, error = 0j, 0.0
        if zeros.families:
            partial = divisor_superzeta(zeros.families, s, z, context=self.context)
            value += partial.value
            error += partial.est_error
        for lattice in zeros.lattices:
            lattice_value, lattice_error = self._lattice_sum(lattice, s, z)
            value += lattice_value
            error += lattice_error
        flags = {"lattice_truncation": self.context.series_truncation if zeros.lattices else 0}
        return SuperzetaResult(value, error, flags)

    # integral representations

    def _require_kernel(self, model: FunctionModel, s: complex, z: complex) -> None:
        if not model.has_mellin_kernel:
            raise DomainError(f"{model.name} has no decaying Mellin kernel along z + [0, inf)")
        model.check_domain(z)
        if not model.admissible(z):
            raise AdmissibilityError(f"{model.name}: z is not admissible", z=z)
        if model.kernel_decay_power is not None and s.real <= 1.0 - model.kernel_decay_power:
            raise ConvergenceDomainError(
                f"{model.name}: kernel decays algebraically, Re(s) must exceed "
                f"{1.0 - model.kernel_decay_power}", s=s,
            )

    def mellin_split(self, model: FunctionModel, s: complex, z: complex, taylor_terms: int) -> MellinSplit:
        """Split I(s, z) at y1 < delta, valid for Re(s) < taylor_terms + 1.

        On [0, y1] the Taylor remainder of the kernel is read off a Cauchy
        integral over |u| = radius/2, which keeps it free of cancellation. On
        [y1, delta] the first n Taylor terms are subtracted from the kernel and
        [delta, inf) is integrated as is.
        """
        s, z = complex(s), complex(z)
        if not 0 <= taylor_terms <= MAX_DERIVATIVE_ORDER - 1:
            raise IndexRangeError("taylor_terms must lie in [0, MAX_DERIVATIVE_ORDER-1]", n=taylor_terms)
        if s.real >= taylor_terms + 1:
            raise ConvergenceDomainError("the split needs Re(s) < taylor_terms + 1", s=s, n=taylor_terms)
        radius = model.analytic_radius(z)
        if radius <= 0.0:
            raise DomainError(f"{model.name}: z is on the boundary of the analytic domain", z=z)
        delta = SPLIT_POINT
        rho = radius / 2.0
        y1 = min(delta, rho / 2.0)
        n = taylor_terms
        coefficients = [
            model.kernel_derivative(j - 1, z, self.context) / math.factorial(j - 1) for j in range(1, n + 1)
        ]

        nodes = rho * np.exp(2j * np.pi * np.arange(CAUCHY_NODES) / CAUCHY_NODES)
        samples = np.array([model.kernel(z + u, self.context) for u in nodes], dtype=complex)
        weights = samples * nodes ** (-n) / CAUCHY_NODES
        kernel_scale = float(np.max(np.abs(samples)))

        def remainder_quotient(y: float) -> complex:
            # (K(z+y) - sum_{j<=n} c_j y^(j-1)) / y^n
            return complex(np.sum(weights / (1.0 - y / nodes)))

        def near_integrand(y: float) -> complex:
            remainder = model.kernel(z + y, self.context)
            power = 1.0
            for c in coefficients:
                remainder -= c * power
                power *= y
            return remainder * complex(y) ** (-s)

        def far_integrand(y: float) -> complex:
            return model.kernel(z + y, self.context) * complex(y) ** (-s)

        epsabs, epsrel = self._tolerances()
        limit = self.context.quad_limit
        inner, inner_error = power_weighted_quad(remainder_quotient, s - n, y1, epsabs, epsrel, limit)
        near, near_error = 0j, 0.0
        if y1 < delta:
            near, near_error = complex_quad(near_integrand, y1, delta, epsabs, epsrel, limit)
        far, far_error = complex_quad(far_integrand, delta, np.inf, epsabs, epsrel, limit)

        # trapezoidal aliasing on the circle, then rounding of the summed and the subtracted integrands
        quotient_scale = 2.0 * kernel_scale * rho ** (-n)
        aliasing = quotient_scale * 2.0 * 2.0 ** (-CAUCHY_NODES) * _power_integral(0.0, y1, s.real - n)
        rounding = DOUBLE_EPS * CAUCHY_NODES ** 0.5 * quotient_scale * _power_integral(0.0, y1, s.real - n)
        if y1 < delta:
            polynomial_scale = kernel_scale + sum(abs(c) * max(delta, 1.0) ** j for j, c in enumerate(coefficients))
            rounding += 4.0 * DOUBLE_EPS * polynomial_scale * _power_integral(y1, delta, s.real)
        flags = {"taylor_terms": n, "delta": delta, "y1": y1}
        logger.debug("mellin split s={} z={} n={} y1={:.3g} errors inner={:.2e} near={:.2e} far={:.2e}",
                     s, z, n, y1, inner_error, near_error, far_error)
        return MellinSplit(
            s=s, taylor_terms=n, delta=delta, y1=y1, coefficients=coefficients,
            inner=inner, near=near, far=far,
            error=inner_error + near_error + far_error + aliasing + rounding, flags=flags,
        )

    @staticmethod
    def default_taylor_terms(s: complex) -> int:
        return int(math.floor(max(complex(s).real, 0.0))) + 1

    def mellin_integral(self, model: FunctionModel, s: complex, z: complex) -> complex:
        """Meromorphic continuation of I(s, z) to Re(s) < MAX_DERIVATIVE_ORDER."""
        s, z = complex(s), complex(z)
        self._require_kernel(model, s, z)
        return self.mellin_split(model, s, z, self.default_taylor_terms(s)).integral()

    def superzeta_integral_rep(self, model: FunctionModel, s: complex, z: complex) -> SuperzetaResult:
        """sin(pi s)/pi * int_0^inf K(z+y) y^(-s) dy for Re(s) < 1, split at delta."""
        s, z = complex(s), complex(z)
        if s.real >= 1.0:
            raise ConvergenceDomainError("the strip representation needs Re(s) < 1", s=s)
        self._require_kernel(model, s, z)
        singular = model.singular_part(s, z)
        if s == 0:
            return SuperzetaResult(singular, 0.0, {"sin_factor": "zero"})

        delta = SPLIT_POINT
        epsabs, epsrel = self._tolerances()
        limit = self.context.quad_limit
        near, near_error = power_weighted_quad(
            lambda y: model.kernel(z + y, self.context), s, delta, epsabs, epsrel, limit
        )
        far, far_error = complex_quad(
            lambda y: model.kernel(z + y, self.context) * complex(y) ** (-s),
            delta, np.inf, epsabs, epsrel, limit,
        )
        factor = cmath.sin(math.pi * s) / math.pi
        result = SuperzetaResult(
            singular + factor * (near + far),
            abs(factor) * (near_error + far_error),
            {"delta": delta, "substitution": 0.0 < s.real < 1.0},
        )
        return self._check_error(result, "superzeta_integral_rep")

    def superzeta_continued(
        self, model: FunctionModel, s: complex, z: complex, mu: Optional[float] = None
    ) -> SuperzetaResult:
        """Entire continuation in s of the superzeta function, valid for Re(s) < mu."""
        s, z = complex(s), complex(z)
        if mu is None:
            mu = max(s.real, 0.0) + 1.0
        if s.real >= mu:
            raise ConvergenceDomainError("superzeta_continued needs Re(s) < mu", s=s, mu=mu)
        self._require_kernel(model, s, z)
        singular = model.singular_part(s, z)
        if s.imag == 0.0 and s.real <= 0.0 and float(s.real).is_integer():
            # sin(pi s) and every polar sinc vanish
            return SuperzetaResult(singular, 0.0, {"sin_factor": "zero"})
        split = self.mellin_split(model, s, z, int(math.floor(mu)))
        value = singular + split.superzeta()
        flags = dict(split.flags)
        nearest = round(s.real)
        if 1 <= nearest <= split.taylor_terms and abs(s - nearest) < REMOVABLE_POLE_WINDOW:
            flags["removable_pole"] = nearest
        error = split.superzeta_error() + DOUBLE_EPS * abs(singular)
        return self._check_error(SuperzetaResult(value, error, flags), "superzeta_continued")

    def superzeta_derivative_rep(self, model: FunctionModel, s: complex, z: complex, m: int) -> SuperzetaResult:
        """(-1)^m / (Gamma(m+1-s) Gamma(s)) * int_0^inf (log f)^(m+1)(z+y) y^(m-s) dy."""
        s, z = complex(s), complex(z)
        if not 0 <= m <= MAX_DERIVATIVE_ORDER - 1:
            raise IndexRangeError("m out of range", m=m)
        if s.real >= m + 1:
            raise ConvergenceDomainError("the representation needs Re(s) < m+1", s=s, m=m)
        if not model.is_zeta_type and s.real <= model.order_kappa:
            raise ConvergenceDomainError("non zeta-type models need Re(s) > kappa", s=s)
        model.check_domain(z)
        if not model.admissible(z):
            raise AdmissibilityError(f"{model.name}: z is not admissible", z=z)
        prefactor = (-1) ** m * complex(special.rgamma(m + 1 - s)) * complex(special.rgamma(s))
        if prefactor == 0:
            return SuperzetaResult(0j, 0.0, {"prefactor": "zero"})

        def derivative(y: float) -> complex:
            return model.log_derivative(m + 1, z + y, self.context)

        epsabs, epsrel = self._tolerances()
        limit = self.context.quad_limit
        near, near_error = power_weighted_quad(derivative, s - m, 1.0, epsabs, epsrel, limit)
        far, far_error = complex_quad(
            lambda y: derivative(y) * complex(y) ** (m - s), 1.0, np.inf, epsabs, epsrel, limit
        )
        result = SuperzetaResult(prefactor * (near + far), abs(prefactor) * (near_error + far_error), {"m": m})
        return self._check_error(result, "superzeta_derivative_rep")

    def superzeta_mellin_series(self, model: FunctionModel, s: complex, z: complex) -> SuperzetaResult:
        """-1/Gamma(s) * sum_n c_n (log q_n)^s q_n^(-z) for Dirichlet-type models."""
        s, z = complex(s), complex(z)
        model.check_domain(z)
        target = self.context.target_rel_error
        prefactor = -complex(special.rgamma(s))
        if prefactor == 0:
            return SuperzetaResult(0j, 0.0, {"prefactor": "zero"})
        # |(log q)^s| = (log q)^Re(s) because log q > 0
        tail = 0.1 * target / abs(prefactor)
        c, log_q = model.dirichlet_terms(z.real, tail, power=s.real)
        terms = c * np.power(log_q + 0j, s) * np.exp(-z * log_q)
        value = prefactor * complex(np.sum(terms))
        rounding = DOUBLE_EPS * math.sqrt(max(c.size, 1)) * float(np.sum(np.abs(terms)))
        error = abs(prefactor) * (tail + 4.0 * rounding)
        return self._check_error(SuperzetaResult(value, error, {"terms": int(c.size)}), "superzeta_mellin_series")

    # residues and determinants

    def i_residue(self, model: FunctionModel, n: int, z: complex) -> complex:
        """Residue of I(s, z) at s = n, i.e. -(log f)^(n)(z)/(n-1)! for zeta-type models."""
        if not 1 <= n <= MAX_DERIVATIVE_ORDER:
            raise IndexRangeError("residue order out of range", n=n, max_order=MAX_DERIVATIVE_ORDER)
        return -model.kernel_derivative(n - 1, complex(z), self.context) / math.factorial(n - 1)

    def extract_i_residue(self, model: FunctionModel, n: int, z: complex) -> SuperzetaResult:
        """Residue of I(s, z) at s = n read off a contour integral around n."""
        if not 1 <= n <= MAX_DERIVATIVE_ORDER - 2:
            raise IndexRangeError("residue order out of range for contour extraction", n=n)
        value, error = contour_residue(
            lambda s: self.mellin_integral(model, s, z), complex(n), self.context.quadrature_nodes
        )
        logger.debug("contour residue n={} z={} -> {} (+/- {:.1e})", n, z, value, error)
        return SuperzetaResult(value, error, {"contour_radius": RESIDUE_CONTOUR_RADIUS, "nodes": self.context.quadrature_nodes})

    def log_det_with_error(self, model: FunctionModel, z: complex, method: str = "analytic") -> Tuple[complex, float]:
        """d/ds Z(s, z) at s = 0 with its error estimate; the determinant is exp(-log_det)."""
        z = complex(z)
        if method == "analytic":
            if not model.is_zeta_type:
                raise DomainError(f"{model.name}: the shortcut d/ds Z = I(0, z) needs a zeta-type model")
            self._require_kernel(model, 0j, z)
            split = self.mellin_split(model, 0j, z, 1)
            return split.integral(), split.error + DOUBLE_EPS * sum(abs(t) for t in split.polar_terms())
        if method == "difference":
            return richardson_derivative(
                lambda s: self.superzeta_continued(model, s, z, mu=1.0).value,
                0j, self.context.derivative_step,
            )
        raise DomainError("unknown derivative method", method=method)

    def log_det(self, model: FunctionModel, z: complex, method: str = "analytic") -> complex:
        return self.log_det_with_error(model, z, method)[0]

    def regularized_det(self, model: FunctionModel, z: complex, method: str = "analytic") -> complex:
        return self.regularized_det_result(model, z, method).value

    def regularized_det_result(self, model: FunctionModel, z: complex, method: str = "analytic") -> SuperzetaResult:
        """exp(-log_det); the error of log_det scales by |det|."""
        log_det, error = self.log_det_with_error(model, z, method)
        det = complex(np.exp(-log_det))
        return SuperzetaResult(det, abs(det) * error, {"method": method})
