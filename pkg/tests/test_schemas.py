import pytest
from pydantic import TypeAdapter, ValidationError

from src.domain.divisor import DivisorFamily
from src.exceptions import DomainError
from src.models.builtin_models import DirichletPolynomialModel, ReciprocalGammaModel
from src.models.dirichlet_series import DirichletSeriesModel
from src.numerics.context import EvalContext
from src.schemas.inputs import (
    BuiltinModelInput, ContextInput, DivisorInput, ExpansionInput, LabeledDivisorInput,
    ModelInput, ZeroSequenceInput, to_complex,
)
from src.schemas.job import GridInput, JobConfig


@pytest.mark.parametrize("raw, expected", [(2, 2 + 0j), (1.5, 1.5 + 0j), ([0.5, -3.0], 0.5 - 3j)])
def test_to_complex(raw, expected):
    assert to_complex(raw) == expected


def test_extra_fields_are_rejected():
    with pytest.raises(ValidationError):
        BuiltinModelInput.model_validate({"builtin": "reciprocal-gamma", "colour": "red"})


def test_model_input_picks_the_matching_shape():
    adapter = TypeAdapter(ModelInput)
    assert isinstance(adapter.validate_python({"builtin": "reciprocal-gamma"}).to_domain(), ReciprocalGammaModel)
    assert isinstance(adapter.validate_python({"builtin": "dirichlet-polynomial", "a": 3.0}).to_domain(), DirichletPolynomialModel)
    series = adapter.validate_python({"kind": "dirichlet", "terms": [[-1.0, 0.0, 2.0], [0.0, 0.5, 3.0]]}).to_domain()
    assert isinstance(series, DirichletSeriesModel)
    assert series.series.terms == ((-1.0 + 0j, 2.0), (0.5j, 3.0))


def test_dirichlet_terms_are_re_im_q_triples():
    adapter = TypeAdapter(ModelInput)
    with pytest.raises(ValidationError):
        adapter.validate_python({"terms": [[-1.0, 2.0]]})
    with pytest.raises(ValidationError):
        adapter.validate_python({"terms": [[-1.0, 0.0, 1.0]]})
    with pytest.raises(ValidationError):
        adapter.validate_python({"kind": "lattice", "terms": [[-1.0, 0.0, 2.0]]})


def test_divisor_input_to_domain():
    divisor = DivisorInput.model_validate({
        "finite": [[0.5, 1.0, 2.0], [0.5, -1.0, 2.0]],
        "progressions": [{"start": -1.0, "order": 1.0}, {"start": [0.0, 0.0], "order": -2.0, "weight": {"multiple": 2}}],
    })
    families = divisor.to_domain()
    assert len(families) == 3
    assert [p.location for p in families[0].points] == [0.5 + 1j, 0.5 - 1j]
    assert families[1] == DivisorFamily.progression(-1.0, 1.0)
    assert families[2] == DivisorFamily.progression(0.0, -2.0, 2)


def test_labeled_divisor_defaults_to_empty_labels():
    divisor = LabeledDivisorInput.model_validate({"poles": {"progressions": [{"start": 0.0, "order": 1.0}]}}).to_domain()
    assert divisor.nontrivial == ()
    assert divisor.trivial == ()
    assert len(divisor.poles) == 1


def test_zero_sequence_input_carries_lattices_and_kappa():
    zeros = ZeroSequenceInput.model_validate({
        "lattices": [{"spacing": 1.5, "center": [-0.5, 0.0]}],
        "kappa": 1.0,
    }).to_domain()
    assert zeros.kappa == 1.0
    assert zeros.lattices[0].spacing == 1.5
    assert zeros.lattices[0].center == -0.5


def test_expansion_input_rejects_an_empty_sector():
    with pytest.raises(ValidationError):
        ExpansionInput.model_validate({"m": 1, "a_tilde": [0.0], "b": [0.0, 0.0], "sector_theta": 0.0})


def test_expansion_input_domain_checks_run_on_conversion():
    # power-term exponents must stay below 1
    raw = {"m": 1, "a_tilde": [0.0, 0.0], "b": [0.0, 0.0], "power_terms": [[1.0, 2.0]], "sector_theta": 1.0}
    with pytest.raises(DomainError):
        ExpansionInput.model_validate(raw).to_domain()


def test_verify_needs_a_suite():
    with pytest.raises(ValidationError):
        JobConfig.model_validate({"command": "verify"})


def test_grid_commands_need_points():
    with pytest.raises(ValidationError):
        JobConfig.model_validate({"command": "eval-superzeta", "inputs": {"model": {"builtin": "reciprocal-gamma"}}})


def test_unknown_input_keys_are_rejected():
    with pytest.raises(ValidationError):
        JobConfig.model_validate({"command": "verify", "suite": "lerch", "inputs": {"modle": "x.json"}})


def test_unknown_suite_is_rejected():
    with pytest.raises(ValidationError):
        JobConfig.model_validate({"command": "verify", "suite": "riemann"})


def test_rect_grid_varies_s_slowest():
    grid = GridInput.model_validate({"points": [[3.0, 1.0]], "rect": {"s": [1.0, 2.0], "z": [5.0, [6.0, 1.0]]}})
    assert grid.pairs() == [(3, 1), (1, 5), (1, 6 + 1j), (2, 5), (2, 6 + 1j)]


def test_context_input_applies_only_given_fields():
    base = EvalContext(target_rel_error=1e-6, quadrature_nodes=16)
    context = ContextInput(series_truncation=50).apply(base)
    assert context.series_truncation == 50
    assert context.target_rel_error == 1e-6
    assert context.quadrature_nodes == 16


def test_context_input_bounds():
    with pytest.raises(ValidationError):
        ContextInput(quadrature_nodes=4)
