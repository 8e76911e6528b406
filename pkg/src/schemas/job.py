from itertools import product
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import conint, model_validator

from config.settings import DEFAULT_FORMAT
from src.schemas.inputs import ComplexValue, ContextInput, StrictModel, to_complex

Command = Literal[
    "eval-superzeta", "eval-det", "residues", "voros",
    "selberg-odd", "selberg-even", "kleinian", "verify",
]
Suite = Literal[
    "lerch", "hurwitz", "multizeta", "residues", "overlap", "determinant",
    "binomial", "selberg-odd", "selberg-even", "kleinian",
]

INPUT_KEYS = ("model", "zeros", "divisor", "expansion", "hadamard", "selberg_odd", "selberg_even", "kleinian")


class RectGrid(StrictModel):
    """Cartesian product of the listed s and z values, s varying slowest."""

    s: List[ComplexValue]
    z: List[ComplexValue]


class GridInput(StrictModel):
    points: List[Tuple[ComplexValue, ComplexValue]] = []
    rect: Optional[RectGrid] = None

    def pairs(self) -> List[Tuple[complex, complex]]:
        pairs = [(to_complex(s), to_complex(z)) for s, z in self.points]
        if self.rect is not None:
            pairs.extend(
                (to_complex(s), to_complex(z)) for s, z in product(self.rect.s, self.rect.z)
            )
        return pairs


class OutputInput(StrictModel):
    path: Optional[str] = None
    format: Literal["csv", "json"] = DEFAULT_FORMAT


class JobOptions(StrictModel):
    evaluation: Literal["continued", "integral", "direct", "mellin-series", "derivative-rep"] = "continued"
    method: Literal["analytic", "difference"] = "analytic"
    mu: Optional[float] = None
    m: conint(ge=0) = 1
    orders: List[conint(ge=1)] = [1, 2, 3]
    k0: Optional[conint(ge=1)] = None
    shifted: bool = False
    # selberg jobs: report the explicit and model parts in branch_flags
    split: bool = False


class JobConfig(StrictModel):
    command: Command
    # each entry is either an inline table or a path relative to the job file
    inputs: Dict[str, Union[str, dict]] = {}
    grid: GridInput = GridInput()
    output: OutputInput = OutputInput()
    context: ContextInput = ContextInput()
    options: JobOptions = JobOptions()
    suite: Optional[Suite] = None

    @model_validator(mode="after")
    def check_command(self) -> "JobConfig":
        unknown = set(self.inputs) - set(INPUT_KEYS)
        if unknown:
            raise ValueError(f"unknown input keys: {sorted(unknown)}")
        if self.command == "verify":
            if self.suite is None:
                raise ValueError("verify needs a suite")
        elif not self.grid.pairs():
            raise ValueError(f"{self.command} needs a non-empty grid")
        return self
