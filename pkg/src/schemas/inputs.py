from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, confloat, conint, conlist

from src.domain.divisor import DivisorFamily, DivisorPoint, LabeledDivisor
from src.domain.expansion import AsymptoticExpansion, HadamardData
from src.domain.selberg import KleinianParams, ScatteringPole, SelbergSpecEven, SelbergSpecOdd
from src.domain.zeros import VerticalLattice, ZeroSequence
from src.models.base_model import FunctionModel
from src.models.builtin_models import DirichletPolynomialModel, ReciprocalGammaModel, SineQuotientModel
from src.models.dirichlet_series import DirichletLogSeries, DirichletSeriesModel
from src.numerics.context import EvalContext

# A complex number in JSON/TOML: either a real number or a [re, im] pair
ComplexValue = Union[float, conlist(float, min_length=2, max_length=2)]


def to_complex(value: ComplexValue) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    return complex(value[0], value[1])


class StrictModel(BaseModel):
    class Config:
        extra = "forbid"


# Models

class DirichletSeriesInput(StrictModel):
    """{"terms": [[re(c), im(c), q], ...], "kappa": ..., "sigma": ...}"""

    kind: Literal["dirichlet"] = "dirichlet"
    terms: List[Tuple[float, float, confloat(gt=1)]]
    kappa: confloat(ge=1) = 1.0
    sigma: float = 0.0

    def to_domain(self) -> FunctionModel:
        series = DirichletLogSeries(
            terms=tuple((complex(re, im), q) for re, im, q in self.terms),
            order_kappa=self.kappa,
            abscissa_sigma=self.sigma,
        )
        return DirichletSeriesModel(series)


class BuiltinModelInput(StrictModel):
    builtin: Literal["dirichlet-polynomial", "reciprocal-gamma", "sine-quotient"]
    a: confloat(gt=1) = 2.0

    def to_domain(self) -> FunctionModel:
        if self.builtin == "dirichlet-polynomial":
            return DirichletPolynomialModel(self.a)
        if self.builtin == "reciprocal-gamma":
            return ReciprocalGammaModel()
        return SineQuotientModel()


ModelInput = Union[BuiltinModelInput, DirichletSeriesInput]


# Divisors and zero sequences

class MultipleWeight(StrictModel):
    multiple: conint(ge=1)


class ProgressionInput(StrictModel):
    start: ComplexValue
    order: float
    weight: Union[Literal["constant"], MultipleWeight] = "constant"

    def to_domain(self) -> DivisorFamily:
        multiple = None if self.weight == "constant" else self.weight.multiple
        return DivisorFamily.progression(to_complex(self.start), self.order, multiple)


class DivisorInput(StrictModel):
    finite: List[Tuple[float, float, float]] = []
    progressions: List[ProgressionInput] = []

    def to_domain(self) -> Tuple[DivisorFamily, ...]:
        families = []
        if self.finite:
            families.append(DivisorFamily.finite(
                DivisorPoint(complex(re, im), order) for re, im, order in self.finite
            ))
        families.extend(p.to_domain() for p in self.progressions)
        return tuple(families)


class LabeledDivisorInput(StrictModel):
    nontrivial: DivisorInput = DivisorInput()
    trivial: DivisorInput = DivisorInput()
    poles: DivisorInput = DivisorInput()

    def to_domain(self) -> LabeledDivisor:
        return LabeledDivisor(
            nontrivial=self.nontrivial.to_domain(),
            trivial=self.trivial.to_domain(),
            poles=self.poles.to_domain(),
        )


class LatticeInput(StrictModel):
    center: ComplexValue = 0.0
    spacing: confloat(gt=0)
    order: float = 1.0

    def to_domain(self) -> VerticalLattice:
        return VerticalLattice(to_complex(self.center), self.spacing, self.order)


class ZeroSequenceInput(DivisorInput):
    lattices: List[LatticeInput] = []
    kappa: Optional[confloat(ge=1)] = None

    def to_domain(self) -> ZeroSequence:
        return ZeroSequence(
            families=super().to_domain(),
            lattices=tuple(l.to_domain() for l in self.lattices),
            kappa=self.kappa,
        )


# Expansions

class ExpansionInput(StrictModel):
    m: conint(ge=0)
    a_tilde: List[ComplexValue]
    b: List[ComplexValue]
    power_terms: List[Tuple[ComplexValue, float]] = []
    sector_theta: confloat(gt=0, lt=3.141592653589793)

    def to_domain(self) -> AsymptoticExpansion:
        return AsymptoticExpansion(
            m=self.m,
            a_tilde=tuple(to_complex(a) for a in self.a_tilde),
            b=tuple(to_complex(b) for b in self.b),
            power_terms=tuple((to_complex(a), mu) for a, mu in self.power_terms),
            sector_theta=self.sector_theta,
        )


class HadamardInput(StrictModel):
    zeros: ZeroSequenceInput = ZeroSequenceInput()
    m: conint(ge=0)
    r: conint(ge=0) = 0

    def to_domain(self) -> HadamardData:
        return HadamardData(zeros=self.zeros.to_domain(), m=self.m, r=self.r)


# Selberg data

class ScatteringPoleInput(StrictModel):
    q: ComplexValue
    b: conint(ge=1)

    def to_domain(self) -> ScatteringPole:
        return ScatteringPole(to_complex(self.q), self.b)


class SelbergOddInput(StrictModel):
    n: conint(ge=1)
    k: conint(ge=0)
    d_c_chi: conint(ge=0)
    d_sigma_k: conint(ge=1)
    e_dk: conint(ge=0)
    a_k: float = 0.0
    scattering_poles: List[ScatteringPoleInput] = []

    def to_domain(self) -> SelbergSpecOdd:
        return SelbergSpecOdd(
            n=self.n, k=self.k, d_c_chi=self.d_c_chi, d_sigma_k=self.d_sigma_k, e_dk=self.e_dk,
            a_k=self.a_k, scattering_poles=tuple(p.to_domain() for p in self.scattering_poles),
        )


class SelbergEvenInput(StrictModel):
    n: conint(ge=1)
    k: conint(ge=0)
    d_c_chi: int
    d_sigma_k: int
    d_dk: conint(ge=0)
    dim_v_chi: conint(ge=1)
    euler_char: int
    scattering_poles: List[ScatteringPoleInput] = []

    def to_domain(self) -> SelbergSpecEven:
        return SelbergSpecEven(
            n=self.n, k=self.k, d_c_chi=self.d_c_chi, d_sigma_k=self.d_sigma_k, d_dk=self.d_dk,
            dim_v_chi=self.dim_v_chi, euler_char=self.euler_char,
            scattering_poles=tuple(p.to_domain() for p in self.scattering_poles),
        )


class KleinianInput(StrictModel):
    index_case: Literal[1, 2]
    c0_abs: confloat(gt=0)
    m_c0: conint(ge=1)
    lattice_coarea: confloat(gt=0)

    def to_domain(self) -> KleinianParams:
        return KleinianParams(self.index_case, self.c0_abs, self.m_c0, self.lattice_coarea)


class ContextInput(StrictModel):
    target_rel_error: Optional[confloat(gt=0)] = None
    series_truncation: Optional[conint(ge=1)] = None
    quadrature_nodes: Optional[conint(ge=8)] = None
    derivative_step: Optional[confloat(gt=0)] = None

    def apply(self, context: EvalContext) -> EvalContext:
        return context.with_overrides(**self.model_dump())
