import pytest

from src.domain.results import CheckResult
from src.exceptions import DomainError
from src.services.verification_service import VerificationService, summarize


@pytest.fixture(scope="module")
def verification():
    return VerificationService()


def _assert_all_passed(results):
    assert results
    failed = [(r.name, r.measured, r.tolerance) for r in results if not r.passed]
    assert not failed, failed


@pytest.mark.parametrize("suite", ["binomial", "kleinian", "lerch", "multizeta"])
def test_fast_suites_pass(verification, suite):
    results = verification.run(suite)
    _assert_all_passed(results)
    assert {r.suite for r in results} == {suite}


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["hurwitz", "residues", "overlap", "determinant", "selberg-odd", "selberg-even"])
def test_quadrature_suites_pass(verification, suite):
    _assert_all_passed(verification.run(suite))


def test_unknown_suite(verification):
    with pytest.raises(DomainError):
        verification.run("riemann")


def test_checks_pass_on_the_tolerance_boundary():
    assert VerificationService._check("lerch", "edge", 1e-9, 1e-9).passed
    assert not VerificationService._check("lerch", "edge", 2e-9, 1e-9).passed


def test_summarize():
    results = [
        CheckResult("binomial", "a", 0.0, 0.0, True),
        CheckResult("binomial", "b", 1.0, 0.0, False),
        CheckResult("binomial", "c", 0.0, 1e-12, True),
    ]
    assert summarize(results) == {"checks": 3, "passed": 2, "failed": 1}
    assert summarize([]) == {"checks": 0, "passed": 0, "failed": 0}
