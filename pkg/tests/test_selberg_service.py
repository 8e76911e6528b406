import cmath
import math

import mpmath
import pytest

from src.domain.divisor import DivisorPoint
from src.domain.selberg import KleinianParams, ScatteringPole, SelbergSpecEven, SelbergSpecOdd
from src.exceptions import BranchCutError, DomainError, IndexRangeError
from src.numerics.differentiation import contour_residue
from src.numerics.special_functions import multiple_hurwitz_zeta
from src.services import selberg_service
from src.services.verification_service import synthetic_even_spec, synthetic_odd_spec
from tests.conftest import assert_close

SQRT_2PI = math.sqrt(2.0 * math.pi)


def _zeta(s, w):
    return complex(mpmath.zeta(s, w))


def _zeta2(s, w):
    return _zeta(s - 1, w) + (1 - w) * _zeta(s, w)


def _log_gamma2(w):
    def derivative(t):
        return complex(mpmath.diff(lambda s: mpmath.zeta(s, w), t))

    return derivative(-1) + (1 - w) * derivative(0)


# odd dimension

@pytest.mark.parametrize(
    "d_c, d_sigma, e, n, k, expected",
    [(1, 1, 1, 2, 2, (1.0, 2.0)), (0, 1, 3, 2, 1, (0.0, 0.0)), (2, 3, 5, 2, 1, (4.0, 6.0))],
)
def test_odd_coefficients(d_c, d_sigma, e, n, k, expected):
    spec = SelbergSpecOdd(n=n, k=k, d_c_chi=d_c, d_sigma_k=d_sigma, e_dk=e)
    assert selberg_service.odd_coefficients(spec) == expected


def test_odd_pole_superzeta_degenerate():
    spec = SelbergSpecOdd(n=1, k=0, d_c_chi=0, d_sigma_k=1, e_dk=0)
    assert selberg_service.odd_pole_superzeta(spec, 0.5, 2.0).value == 0


def test_odd_single_scattering_pole():
    spec = SelbergSpecOdd(n=1, k=0, d_c_chi=0, d_sigma_k=1, e_dk=0, scattering_poles=(ScatteringPole(0.5, 2),))
    s, z = 1.7 + 0.3j, 2.5
    assert_close(selberg_service.odd_pole_superzeta(spec, s, z).value, 2 * (z - 0.5) ** (-s), rel=1e-14)


def test_odd_pole_divisor_labels():
    divisor = selberg_service.odd_pole_divisor(synthetic_odd_spec())
    assert divisor.nontrivial == () and divisor.trivial == ()
    finite, progression = divisor.poles
    assert set(finite.points) == {DivisorPoint(1.0, 1.0), DivisorPoint(0.5, 2.0)}
    assert progression.start == 0 and progression.order == 2.0


def test_odd_pole_residue_is_beta():
    spec = synthetic_odd_spec()
    _, beta = selberg_service.odd_coefficients(spec)
    residue, _ = contour_residue(lambda s: selberg_service.odd_pole_superzeta(spec, s, 3.5).value, 1.0 + 0j, 32)
    assert abs(residue - beta) < 1e-8


@pytest.mark.slow
def test_odd_nontrivial_has_its_only_pole_at_one(dirichlet_polynomial):
    spec = synthetic_odd_spec()
    _, beta = selberg_service.odd_coefficients(spec)

    def residue_at(center):
        residue, _ = contour_residue(
            lambda s: selberg_service.odd_nontrivial_superzeta(spec, dirichlet_polynomial, s, 3.5).value,
            complex(center), 32,
        )
        return residue

    assert abs(residue_at(1.0) - beta) < 1e-6
    # the strip 0.5 <= Re(s) <= 2n holds no other pole
    for center in [0.5, 1.5] + [float(j) for j in range(2, 2 * spec.n + 1)]:
        assert abs(residue_at(center)) < 1e-6


@pytest.mark.parametrize("s", [-0.5, 0.5 + 1j, 2.5])
def test_shifted_pole_form_agrees(s):
    spec = SelbergSpecOdd(
        n=2, k=1, d_c_chi=2, d_sigma_k=3, e_dk=5, a_k=0.7, scattering_poles=(ScatteringPole(0.25 + 0.5j, 1),),
    )
    z = 3.5
    pole_form = selberg_service.odd_pole_superzeta(spec, s, z).value
    shifted = selberg_service.odd_pole_superzeta_shifted(spec, s, z)
    assert_close(shifted, pole_form, rel=1e-10)


def test_odd_nontrivial_reduces_to_model(superzeta, dirichlet_polynomial):
    spec = SelbergSpecOdd(n=1, k=0, d_c_chi=0, d_sigma_k=1, e_dk=0)
    value = selberg_service.odd_nontrivial_superzeta(spec, dirichlet_polynomial, 0.5, 2.0).value
    assert_close(value, superzeta.superzeta_continued(dirichlet_polynomial, 0.5, 2.0).value, rel=1e-12)


def test_odd_nontrivial_is_model_plus_poles(superzeta, dirichlet_polynomial):
    spec = synthetic_odd_spec()
    s, z = 2.5, 3.5
    result = selberg_service.odd_nontrivial_superzeta(spec, dirichlet_polynomial, s, z)
    direct = superzeta.superzeta_direct(dirichlet_polynomial.zero_oracle, s, z).value
    poles = selberg_service.odd_pole_superzeta(spec, s, z).value
    assert_close(result.value, direct + poles, rel=1e-8)
    shifted = selberg_service.odd_nontrivial_superzeta(spec, dirichlet_polynomial, s, z, shifted=True)
    assert shifted.branch_flags["form"] == "shifted"
    assert_close(shifted.value, result.value, rel=1e-10)


def test_odd_regularized_product():
    trivial = SelbergSpecOdd(n=1, k=0, d_c_chi=0, d_sigma_k=1, e_dk=0)
    assert selberg_service.odd_regularized_product(trivial, 0.3 + 0.1j, 2.0) == 0.3 + 0.1j
    gamma_only = SelbergSpecOdd(n=1, k=0, d_c_chi=1, d_sigma_k=1, e_dk=1)
    assert selberg_service.odd_coefficients(gamma_only) == (0.0, 1.0)
    assert_close(selberg_service.odd_regularized_product(gamma_only, 1.0, 0.5), math.sqrt(2.0), rel=1e-13)


def test_odd_regularized_product_cut():
    spec = SelbergSpecOdd(n=2, k=0, d_c_chi=2, d_sigma_k=3, e_dk=5)
    with pytest.raises(BranchCutError):
        selberg_service.odd_regularized_product(spec, 1.0, -1.0)


# even dimension

def test_even_residue_examples():
    spec = SelbergSpecEven(n=1, k=0, d_c_chi=0, d_sigma_k=1, d_dk=0, dim_v_chi=1, euler_char=1)
    assert_close(selberg_service.even_residue(spec, 2, 1.7 + 0.2j), 2.0)
    empty = SelbergSpecEven(n=1, k=0, d_c_chi=0, d_sigma_k=1, d_dk=0, dim_v_chi=1, euler_char=0)
    assert selberg_service.even_residue(empty, 1, 2.0) == 0
    with pytest.raises(IndexRangeError):
        selberg_service.even_residue(spec, 3, 2.0)


def test_even_residue_at_one_adds_cusp_term():
    with_cusp = SelbergSpecEven(n=2, k=1, d_c_chi=2, d_sigma_k=3, d_dk=0, dim_v_chi=1, euler_char=2)
    without = SelbergSpecEven(n=2, k=1, d_c_chi=0, d_sigma_k=3, d_dk=0, dim_v_chi=1, euler_char=2)
    z = 3.25
    assert_close(selberg_service.even_residue(with_cusp, 1, z) - selberg_service.even_residue(without, 1, z), 6.0)
    assert_close(selberg_service.even_residue(with_cusp, 3, z), selberg_service.even_residue(without, 3, z))


def test_even_divisor_structure():
    divisor = selberg_service.even_divisor(synthetic_even_spec())
    finite_trivial = [family for family in divisor.trivial if family.kind == "finite"]
    assert finite_trivial[0].points == (DivisorPoint(0.0, 1.0),)
    multiples = [family for family in divisor.trivial if family.kind == "progression"]
    assert {(family.start, family.order, family.multiple) for family in multiples} == {
        (0j, -1.0, 2), (-1 + 0j, -1.0, 2),
    }
    starts = {family.start for family in divisor.poles if family.kind == "progression"}
    assert starts == {-0.5 + 0j}


def test_even_explicit_superzeta():
    s, z = 2.5, 3.5
    expected = (
        3.25 ** (-s) + _zeta(s, 4.0)
        - 3.5 ** (-s) + _zeta2(s, 3.5) + _zeta2(s, 4.5)
    )
    value = selberg_service.even_explicit_superzeta(synthetic_even_spec(), s, z).value
    assert_close(value, expected, rel=1e-11)


def test_even_nontrivial_reduces_to_model(superzeta, dirichlet_polynomial):
    spec = SelbergSpecEven(n=1, k=0, d_c_chi=1, d_sigma_k=0, d_dk=1, dim_v_chi=1, euler_char=0)
    value = selberg_service.even_nontrivial_superzeta(spec, dirichlet_polynomial, 0.5, 2.0).value
    assert_close(value, superzeta.superzeta_continued(dirichlet_polynomial, 0.5, 2.0).value, rel=1e-12)


def test_even_regularized_product():
    spec = SelbergSpecEven(n=1, k=0, d_c_chi=1, d_sigma_k=0, d_dk=1, dim_v_chi=1, euler_char=0)
    assert selberg_service.even_regularized_product(spec, 0.5 - 0.5j, 2.0) == 0.5 - 0.5j
    # gamma = 0 here, leaving the cusp gamma factor and the multiple gamma factors
    cusp_only = SelbergSpecEven(n=1, k=0, d_c_chi=1, d_sigma_k=1, d_dk=0, dim_v_chi=1, euler_char=1)
    z = 2.5
    value = selberg_service.even_regularized_product(cusp_only, 1.0, z)
    expected = (
        (SQRT_2PI / complex(mpmath.gamma(z - 1 + 1.5)))
        * cmath.exp(-_log_gamma2(z) - _log_gamma2(z + 1))
    )
    assert_close(value, expected, rel=1e-9)


def test_raw_weights():
    assert [selberg_service.even_raw_weight(1, 0, l) for l in range(1, 6)] == [3, 5, 7, 9, 11]
    assert selberg_service.even_raw_weight(2, 1, 1) == 10
    assert selberg_service.even_raw_weight(2, 1, 2) == 35


@pytest.mark.parametrize("n, k", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)])
def test_raw_weight_polynomial(n, k):
    polynomial = selberg_service.even_raw_weight_polynomial(n, k)
    assert polynomial.degree() == 2 * n - 1
    for l in range(1, 31):
        assert_close(polynomial(l), selberg_service.even_raw_weight(n, k, l), rel=1e-9)


def test_raw_series_against_hurwitz():
    s, z = 3.5, 2.3 + 0.4j
    # 2l + 1 = 2(z + l) + 1 - 2z
    expected = 2 * _zeta(s - 1, z + 1) + (1 - 2 * z) * _zeta(s, z + 1)
    value = selberg_service.even_raw_weighted_series(1, 0, s, z).value
    assert_close(value, expected, rel=1e-10)


@pytest.mark.parametrize("n, k", [(1, 0), (2, 0), (2, 1)])
def test_raw_series_equals_multiple_zeta_blocks(n, k):
    s, w = 2 * n + 1.5, 3.3 + 0.2j
    raw = selberg_service.even_raw_weighted_series(n, k, s, w).value
    blocks = sum(
        (-1) ** j * math.comb(2 * n, k - j) * (
            multiple_hurwitz_zeta(2 * n, s, w - j)
            + multiple_hurwitz_zeta(2 * n, s, w + j + 1)
        )
        for j in range(k + 1)
    ) + (-1) ** (k + 1) * (w - k) ** (-s)
    assert_close(raw, blocks, rel=1e-8)


def test_raw_series_domain():
    with pytest.raises(DomainError):
        selberg_service.even_raw_weighted_series(1, 0, 2.0, 2.0)
    with pytest.raises(IndexRangeError):
        selberg_service.even_raw_weighted_series(1, 1, 3.5, 2.0)


def test_binomial_identity_examples():
    assert selberg_service.binomial_identity_check(1, 1, 0) == (True, True, True)
    assert selberg_service.binomial_identity_check(3, 0, 4)[1]


def test_binomial_identities_exhaustive():
    for n in range(1, 9):
        for k in range(0, min(n, 8) + 1):
            for m in range(0, 13):
                assert selberg_service.binomial_identity_check(n, k, m) == (True, True, True), (n, k, m)


# Kleinian groups

def test_kleinian_unit_constants():
    case_1 = selberg_service.kleinian_constants(KleinianParams(1, 1.0, 1, 1.0), 2.0)
    assert case_1.det_prefactor_plus == SQRT_2PI
    assert_close(case_1.phi_quotient_prefactor, math.pi, rel=1e-15)
    case_2 = selberg_service.kleinian_constants(KleinianParams(2, 1.0, 1, 1.0), 0.7)
    assert case_2.phi_quotient_prefactor == math.pi / 2
    assert case_2.phi_quotient_prefactor_as_printed == case_2.phi_quotient_prefactor


def test_kleinian_plus_prefactor_is_constant():
    params = KleinianParams(1, 2.0, 3, 0.5)
    for s in (0.5, 2.0, 1 + 3j):
        assert selberg_service.kleinian_constants(params, s).det_prefactor_plus == SQRT_2PI


def test_kleinian_as_printed_exponent():
    params = KleinianParams(1, 2.0, 1, 1.0)
    constants = selberg_service.kleinian_constants(params, 1.5)
    assert_close(constants.phi_quotient_prefactor_as_printed, 2.0 * constants.phi_quotient_prefactor, rel=1e-14)


@pytest.mark.parametrize("case", [1, 2])
def test_kleinian_expansion_reproduces_prefactors(voros, case):
    params = KleinianParams(case, 2.0, 3, 0.5)
    s = 2.5
    constants = selberg_service.kleinian_constants(params, s)
    plus = voros.voros_det(selberg_service.kleinian_expansion(params, "+"), 1.0, s)
    minus = voros.voros_det(selberg_service.kleinian_expansion(params, "-"), 1.0, s)
    assert_close(plus, constants.det_prefactor_plus, rel=1e-12)
    assert_close(minus, constants.det_prefactor_minus, rel=1e-12)
    assert_close(plus / minus, constants.phi_quotient_prefactor, rel=1e-12)


def test_kleinian_expansion_sign():
    with pytest.raises(DomainError):
        selberg_service.kleinian_expansion(KleinianParams(1, 1.0, 1, 1.0), "0")


def test_selberg_split(dirichlet_polynomial, superzeta):
    result = selberg_service.selberg_split(synthetic_odd_spec(), dirichlet_polynomial, 0.5, 3.5)
    own, explicit = complex(*result.branch_flags["model"]), complex(*result.branch_flags["explicit"])
    assert_close(own, superzeta.superzeta_continued(dirichlet_polynomial, 0.5, 3.5).value, rel=1e-10)
    assert_close(result.value, explicit + own, rel=1e-14)
    even = selberg_service.selberg_split(synthetic_even_spec(), dirichlet_polynomial, 2.5, 3.5)
    assert_close(complex(*even.branch_flags["explicit"]), selberg_service.even_explicit_superzeta(
        synthetic_even_spec(), 2.5, 3.5).value, rel=1e-14)
