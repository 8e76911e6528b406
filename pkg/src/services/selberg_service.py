"""Superzeta functions, residues and regularized products of Selberg-type divisors.

The Selberg zeta function itself is replaced by a zeta-type FunctionModel
carrying the same declared divisor data; every formula here is an identity
in that data.
"""
import cmath
import math
from typing import List, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from src.domain.divisor import DivisorFamily, DivisorPoint, LabeledDivisor, on_cut
from src.domain.expansion import AsymptoticExpansion
from src.domain.results import KleinianConstants, SuperzetaResult
from src.domain.selberg import KleinianParams, SelbergSpecEven, SelbergSpecOdd
from src.exceptions import AdmissibilityError, BranchCutError, DomainError, IndexRangeError
from src.models.base_model import FunctionModel
from src.numerics.context import EvalContext, resolve_context
from src.numerics.special_functions import (
    LOG_SQRT_2PI, hurwitz_zeta, log_gamma, log_multiple_gamma, p_poly,
)
from src.numerics.stirling import binom
from src.services.divisor_service import admissible, divisor_superzeta, normalize
from src.services.superzeta_service import SuperzetaService

RAW_SERIES_DIRECT_TERMS = 20


def _cut_log(w: complex, what: str) -> complex:
    if on_cut(w):
        raise BranchCutError(f"{what} lies on the cut (-inf, 0]", w=complex(w))
    return cmath.log(w)


# odd dimension d = 2n + 1

def odd_coefficients(spec: SelbergSpecOdd) -> Tuple[float, float]:
    """alpha = d_c (e - (1 - delta_kn) d_sigma), beta = (1 + delta_kn) d_c d_sigma."""
    alpha = spec.d_c_chi * (spec.e_dk - (1 - spec.delta_kn) * spec.d_sigma_k)
    beta = (1 + spec.delta_kn) * spec.d_c_chi * spec.d_sigma_k
    return float(alpha), float(beta)


def odd_pole_divisor(spec: SelbergSpecOdd) -> LabeledDivisor:
    alpha, beta = odd_coefficients(spec)
    points: List[DivisorPoint] = []
    if alpha:
        points.append(DivisorPoint(spec.k, alpha))
    if spec.a_k:
        points.append(DivisorPoint(spec.n, 0.5 * spec.d_sigma_k * spec.a_k))
    for pole in spec.scattering_poles:
        points.append(DivisorPoint(spec.n - pole.q, spec.d_sigma_k * pole.b))
    families = [DivisorFamily.finite(points)]
    if beta:
        families.append(DivisorFamily.progression(spec.n - 1, beta))
    return normalize(LabeledDivisor(poles=tuple(families)))


def odd_pole_superzeta(spec: SelbergSpecOdd, s: complex, z: complex, context: EvalContext = None) -> SuperzetaResult:
    """Z^P = alpha (z-k)^(-s) + d_sigma a_k/2 (z-n)^(-s) + sum_j d_sigma b_j (z-n+q_j)^(-s) + beta zeta_H(s, z-n+1)."""
    divisor = odd_pole_divisor(spec)
    if not admissible(divisor, z):
        raise AdmissibilityError("z is not admissible for the odd pole divisor", z=complex(z))
    return divisor_superzeta(divisor.poles, s, z, context=context)


def odd_pole_superzeta_shifted(spec: SelbergSpecOdd, s: complex, z: complex, context: EvalContext = None) -> complex:
    """The same pole sum written with (d_sigma a_k/2 - beta)(z-n)^(-s) + beta zeta_H(s, z-n)."""
    s, z = complex(s), complex(z)
    alpha, beta = odd_coefficients(spec)
    n = spec.n
    value = alpha * (z - spec.k) ** (-s) + (0.5 * spec.d_sigma_k * spec.a_k - beta) * (z - n) ** (-s)
    for pole in spec.scattering_poles:
        value += spec.d_sigma_k * pole.b * (z - (n - pole.q)) ** (-s)
    if beta:
        value += beta * hurwitz_zeta(s, z - n, context)
    return value


def odd_nontrivial_superzeta(
    spec: SelbergSpecOdd,
    model: FunctionModel,
    s: complex,
    z: complex,
    context: EvalContext = None,
    shifted: bool = False,
) -> SuperzetaResult:
    """Z^NT = Z^P + (sin pi s / pi) int_0^inf (Z'/Z)(z+y) y^(-s) dy, continued in s."""
    context = resolve_context(context)
    integral = SuperzetaService(context).superzeta_continued(model, s, z)
    if shifted:
        explicit = odd_pole_superzeta_shifted(spec, s, z, context)
        explicit_error = context.target_rel_error * abs(explicit)
    else:
        pole_part = odd_pole_superzeta(spec, s, z, context)
        explicit, explicit_error = pole_part.value, pole_part.est_error
    flags = dict(integral.branch_flags, form="shifted" if shifted else "pole")
    return SuperzetaResult(explicit + integral.value, explicit_error + integral.est_error, flags)


def odd_regularized_product(spec: SelbergSpecOdd, f_value: complex, z: complex) -> complex:
    """(z-k)^alpha (z-n)^(d_sigma a_k/2) prod_j (z-n+q_j)^(d_sigma b_j) (Gamma(z-n+1)/sqrt(2 pi))^(-beta) f."""
    z = complex(z)
    alpha, beta = odd_coefficients(spec)
    n = spec.n
    log_value = alpha * _cut_log(z - spec.k, "z - k") if alpha else 0j
    if spec.a_k:
        log_value += 0.5 * spec.d_sigma_k * spec.a_k * _cut_log(z - n, "z - n")
    for pole in spec.scattering_poles:
        log_value += spec.d_sigma_k * pole.b * _cut_log(z - n + pole.q, "z - n + q_j")
    if beta:
        _cut_log(z - n + 1, "z - n + 1")
        log_value -= beta * (log_gamma(z - n + 1) - LOG_SQRT_2PI)
    return complex(np.exp(log_value)) * complex(f_value)


# even dimension d = 2n

def _even_gamma(spec: SelbergSpecEven) -> int:
    return spec.d_c_chi * spec.d_dk + (-1) ** (spec.k + 1) * (1 - spec.ve)


def even_divisor(spec: SelbergSpecEven) -> LabeledDivisor:
    """Explicit divisor data of the even case, labelled so that Z^NT = Z_f + Z^P - Z^T.

    Poles: the scattering points n - 1/2 - q_j and the progression from n - 3/2.
    Trivial: the multiple-weight progressions from j and -j-1 and the point k.
    """
    n, k = spec.n, spec.k
    poles: List[DivisorFamily] = [DivisorFamily.finite(
        DivisorPoint(n - 0.5 - pole.q, spec.d_sigma_k * pole.b) for pole in spec.scattering_poles
    )]
    if spec.d_c_chi * spec.d_sigma_k:
        poles.append(DivisorFamily.progression(n - 1.5, spec.d_c_chi * spec.d_sigma_k))

    trivial: List[DivisorFamily] = []
    if _even_gamma(spec):
        trivial.append(DivisorFamily.finite([DivisorPoint(k, _even_gamma(spec))]))
    if spec.ve:
        for j in range(k + 1):
            weight = -spec.ve * (-1) ** j * binom(2 * n, k - j)
            if weight:
                trivial.append(DivisorFamily.progression(j, weight, multiple=2 * n))
                trivial.append(DivisorFamily.progression(-j - 1, weight, multiple=2 * n))
    return normalize(LabeledDivisor(trivial=tuple(trivial), poles=tuple(poles)))


def even_explicit_superzeta(spec: SelbergSpecEven, s: complex, z: complex, context: EvalContext = None) -> SuperzetaResult:
    """Z^P - Z^T for the even divisor."""
    divisor = even_divisor(spec)
    if not admissible(divisor, z):
        raise AdmissibilityError("z is not admissible for the even divisor", z=complex(z))
    poles = divisor_superzeta(divisor.poles, s, z, context=context)
    trivial = divisor_superzeta(divisor.trivial, s, z, context=context)
    return SuperzetaResult(poles.value - trivial.value, poles.est_error + trivial.est_error)


def even_nontrivial_superzeta(
    spec: SelbergSpecEven, model: FunctionModel, s: complex, z: complex, context: EvalContext = None
) -> SuperzetaResult:
    context = resolve_context(context)
    integral = SuperzetaService(context).superzeta_continued(model, s, z)
    explicit = even_explicit_superzeta(spec, s, z, context)
    return SuperzetaResult(
        explicit.value + integral.value, explicit.est_error + integral.est_error, integral.branch_flags
    )


def even_residue(spec: SelbergSpecEven, r: int, z: complex) -> complex:
    n, k = spec.n, spec.k
    if not 1 <= r <= 2 * n:
        raise IndexRangeError("even residues exist for 1 <= r <= 2n", r=r, n=n)
    z = complex(z)
    value = complex(spec.d_c_chi * spec.d_sigma_k if r == 1 else 0)
    total = 0j
    for j in range(k + 1):
        total += (-1) ** j * binom(2 * n, k - j) * (p_poly(2 * n, r - 1, z - j) + p_poly(2 * n, r - 1, z + j + 1))
    return value + spec.ve * total


def even_raw_weight(n: int, k: int, l: int) -> int:
    """C(2n+l-1, l+k) C(l+k-1, k) + C(2n+l-1, k) C(2n+l-k-2, l-1)."""
    return binom(2 * n + l - 1, l + k) * binom(l + k - 1, k) + binom(2 * n + l - 1, k) * binom(2 * n + l - k - 2, l - 1)


def _rising_binomial(shift: int, size: int) -> Polynomial:
    """C(l + shift, size) as a polynomial in l."""
    roots = [-(shift - i) for i in range(size)]
    return Polynomial.fromroots(roots) / math.factorial(size) if size else Polynomial([1.0])


def even_raw_weight_polynomial(n: int, k: int) -> Polynomial:
    """Degree 2n-1 polynomial agreeing with even_raw_weight(n, k, l) for l >= 1."""
    first = _rising_binomial(2 * n - 1, 2 * n - 1 - k) * _rising_binomial(k - 1, k)
    second = _rising_binomial(2 * n - 1, k) * _rising_binomial(2 * n - k - 2, 2 * n - k - 1)
    return first + second


def even_raw_weighted_series(n: int, k: int, s: complex, z: complex, context: EvalContext = None) -> SuperzetaResult:
    """sum_{l >= 1} W_l (z+l)^(-s) with the raw binomial weights.

    The first terms are summed directly; the rest is rewritten through the
    weight polynomial re-expanded in powers of (z+l) into Hurwitz tails.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise IndexRangeError("the raw series needs n >= 1 and 0 <= k <= n-1", n=n, k=k)
    s, z = complex(s), complex(z)
    if s.real <= 2 * n:
        raise DomainError("the raw series converges for Re(s) > 2n", s=s, n=n)
    depth = RAW_SERIES_DIRECT_TERMS
    l = np.arange(1, depth + 1)
    weights = np.array([even_raw_weight(n, k, int(i)) for i in l], dtype=float)
    head = complex(np.sum(weights * np.power(z + l, -s)))

    # W(l) = W(u - z) with u = z + l
    shifted = even_raw_weight_polynomial(n, k)(Polynomial([-z, 1.0]))
    tail = sum(
        (coefficient * hurwitz_zeta(s - d, z + depth + 1, context) for d, coefficient in enumerate(shifted.coef)),
        0j,
    )
    value = head + tail
    return SuperzetaResult(value, 1e-14 * max(1.0, abs(value)), {"direct_terms": depth})


def even_regularized_product(spec: SelbergSpecEven, f_value: complex, z: complex, context: EvalContext = None) -> complex:
    """f (z-k)^(-gamma) prod_j (z-n+1/2+q_j)^(d_sigma b_j) (Gamma(z-n+3/2)/sqrt(2 pi))^(-d_c d_sigma)
    prod_j (Gamma_2n(z-j) Gamma_2n(z+j+1))^(-VE (-1)^j C(2n, k-j))."""
    z = complex(z)
    n, k = spec.n, spec.k
    gamma = _even_gamma(spec)
    log_value = -gamma * _cut_log(z - k, "z - k") if gamma else 0j
    for pole in spec.scattering_poles:
        log_value += spec.d_sigma_k * pole.b * _cut_log(z - n + 0.5 + pole.q, "z - n + 1/2 + q_j")
    if spec.d_c_chi * spec.d_sigma_k:
        _cut_log(z - n + 1.5, "z - n + 3/2")
        log_value -= spec.d_c_chi * spec.d_sigma_k * (log_gamma(z - n + 1.5) - LOG_SQRT_2PI)
    if spec.ve:
        for j in range(k + 1):
            weight = spec.ve * (-1) ** j * binom(2 * n, k - j)
            if weight:
                _cut_log(z - j, "z - j")
                log_value -= weight * (
                    log_multiple_gamma(2 * n, z - j, context) + log_multiple_gamma(2 * n, z + j + 1, context)
                )
    return complex(np.exp(log_value)) * complex(f_value)


def binomial_identity_check(n: int, k: int, m: int) -> Tuple[bool, bool, bool]:
    """Exact-integer check of the three transformation identities behind the even-case rewriting.

    The first holds for m in {0..k-1} and the other two for m >= 1; outside
    their ranges an identity is reported as holding.
    """
    if n < 1 or k < 0 or m < 0:
        raise IndexRangeError("need n >= 1, k >= 0 and m >= 0", n=n, k=k, m=m)
    first = True
    if m <= k - 1:
        first = sum(
            (-1) ** j * binom(2 * n, k - m - j) * binom(2 * n + j - 1, j) for j in range(k - m + 1)
        ) == 0
    second = third = True
    if m >= 1:
        second = sum(
            (-1) ** j * binom(2 * n, k - j) * binom(2 * n + m + j - 1, m + j) for j in range(k + 1)
        ) == binom(2 * n + m - 1, m + k) * binom(m + k - 1, k)
        third = sum(
            (-1) ** j * binom(2 * n, k - j) * binom(2 * n + m - j - 2, m - j - 1)
            for j in range(min(k, m - 1) + 1)
        ) == binom(2 * n + m - 1, k) * binom(2 * n + m - k - 2, m - 1)
    return first, second, third


# Kleinian groups

def kleinian_constants(params: KleinianParams, s: complex) -> KleinianConstants:
    s = complex(s)
    c0, coarea, mult = params.c0_abs, params.lattice_coarea, params.m_c0
    scale = c0 ** (2 * s) * coarea ** s * c0 ** 2 / (math.pi * mult)
    if params.index_case == 1:
        plus = complex(math.sqrt(2.0 * math.pi))
        minus = scale * plus
        phi = math.pi * mult / (c0 ** (2 * s + 2) * coarea ** s)
        phi_as_printed = math.pi * mult / (c0 ** (2 * s + 1) * coarea ** s)
    else:
        plus = math.sqrt(math.pi) * 2.0 ** ((3.0 - s) / 2.0)
        minus = scale * math.sqrt(math.pi) * 2.0 ** ((5.0 - s) / 2.0)
        phi = math.pi * mult / (2.0 * c0 ** (2 * s + 2) * coarea ** s)
        phi_as_printed = phi
    return KleinianConstants(complex(plus), complex(minus), complex(phi), complex(phi_as_printed))


def kleinian_expansion(params: KleinianParams, sign: str) -> AsymptoticExpansion:
    """Expansion of log Z^(+/-) as Re(s) -> +inf; the minus side adds log phi."""
    if sign not in ("+", "-"):
        raise DomainError("sign must be '+' or '-'", sign=sign)
    log_2pi_half = 0.5 * math.log(2.0 * math.pi)
    c0_sq = params.c0_abs ** 2
    if params.index_case == 1:
        a_tilde = (0.5, -1.0)
        b0, b1 = -log_2pi_half, 0.0
        phi_constant = math.log(math.pi * params.m_c0 / c0_sq)
    else:
        a_tilde = (2.0, -0.5)
        b0, b1 = -log_2pi_half - math.log(2.0), 0.5 * math.log(2.0)
        phi_constant = math.log(math.pi * params.m_c0 / (2.0 * c0_sq))
    if sign == "-":
        b0 += phi_constant
        b1 -= math.log(c0_sq * params.lattice_coarea)
    return AsymptoticExpansion(m=1, a_tilde=a_tilde, b=(b0, b1), power_terms=(), sector_theta=math.pi / 2)


def selberg_split(
    spec, model: FunctionModel, s: complex, z: complex, context: EvalContext = None, shifted: bool = False
) -> SuperzetaResult:
    """Z^NT at (s, z) with its explicit divisor part and the model's own superzeta in the flags."""
    context = resolve_context(context)
    if isinstance(spec, SelbergSpecOdd):
        total = odd_nontrivial_superzeta(spec, model, s, z, context, shifted=shifted)
        if shifted:
            explicit = odd_pole_superzeta_shifted(spec, s, z, context)
        else:
            explicit = odd_pole_superzeta(spec, s, z, context).value
    else:
        total = even_nontrivial_superzeta(spec, model, s, z, context)
        explicit = even_explicit_superzeta(spec, s, z, context).value
    own = total.value - explicit
    flags = dict(total.branch_flags, explicit=[explicit.real, explicit.imag], model=[own.real, own.imag])
    return SuperzetaResult(total.value, total.est_error, flags)
