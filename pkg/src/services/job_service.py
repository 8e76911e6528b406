import json
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd
from loguru import logger
from pydantic import BaseModel, TypeAdapter, ValidationError

from src.domain.results import SuperzetaResult
from src.exceptions import AccuracyError, InputParseError, SuperzetaError
from src.numerics.context import EvalContext
from src.schemas.inputs import (
    ExpansionInput, HadamardInput, KleinianInput, LabeledDivisorInput, ModelInput,
    SelbergEvenInput, SelbergOddInput, ZeroSequenceInput,
)
from src.schemas.job import JobConfig
from src.services import selberg_service
from src.services.divisor_service import labeled_superzeta
from src.services.superzeta_service import SuperzetaService
from src.services.verification_service import VerificationService, summarize
from src.services.voros_service import VorosService

CSV_COLUMNS = ["s_re", "s_im", "z_re", "z_im", "value_re", "value_im", "est_error"]
CHECK_COLUMNS = ["suite", "name", "measured", "tolerance", "passed"]

INPUT_SCHEMAS = {
    "model": TypeAdapter(ModelInput),
    "zeros": TypeAdapter(ZeroSequenceInput),
    "divisor": TypeAdapter(LabeledDivisorInput),
    "expansion": TypeAdapter(ExpansionInput),
    "hadamard": TypeAdapter(HadamardInput),
    "selberg_odd": TypeAdapter(SelbergOddInput),
    "selberg_even": TypeAdapter(SelbergEvenInput),
    "kleinian": TypeAdapter(KleinianInput),
}


def load_document(path: Path) -> Dict[str, Any]:
    """Read a JSON or TOML table, chosen by the file suffix."""
    try:
        if path.suffix == ".toml":
            with open(path, "rb") as handle:
                return tomllib.load(handle)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as exc:
        raise InputParseError("input file not found", path=str(path)) from exc
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise InputParseError(f"cannot decode {path.name}: {exc}", path=str(path)) from exc


def load_job(path: Path) -> JobConfig:
    try:
        return JobConfig.model_validate(load_document(path))
    except ValidationError as exc:
        raise InputParseError(f"invalid job file: {exc.errors()[0]['msg']}", path=str(path)) from exc


def diagnostic_line(error: SuperzetaError) -> str:
    return json.dumps(error.diagnostic(), sort_keys=True)


class JobService:
    """Runs one JobConfig and writes its table."""

    def __init__(self, config: JobConfig, base_dir: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None):
        self.config = config
        self.base_dir = base_dir or Path.cwd()
        # environment defaults, then the job file, then command-line flags
        self.context = config.context.apply(EvalContext()).with_overrides(**(overrides or {}))
        self._inputs: Dict[str, BaseModel] = {}

    def _input(self, key: str):
        """Domain value of an input, loaded from its path when given as a string."""
        if key not in self.config.inputs:
            raise InputParseError(f"{self.config.command} needs the '{key}' input")
        if key not in self._inputs:
            raw = self.config.inputs[key]
            if isinstance(raw, str):
                raw = load_document(self.base_dir / raw)
            try:
                self._inputs[key] = INPUT_SCHEMAS[key].validate_python(raw)
            except ValidationError as exc:
                raise InputParseError(f"invalid '{key}' input: {exc.errors()[0]['msg']}") from exc
        return self._inputs[key].to_domain()

    def _evaluator(self) -> Callable[[complex, complex], SuperzetaResult]:
        command = self.config.command
        options = self.config.options
        superzeta = SuperzetaService(self.context)

        if command == "eval-superzeta":
            if options.evaluation == "direct":
                if "divisor" in self.config.inputs:
                    divisor = self._input("divisor")
                    return lambda s, z: labeled_superzeta(divisor, s, z, context=self.context)["total"]
                zeros = self._input("zeros")
                return lambda s, z: superzeta.superzeta_direct(zeros, s, z)
            model = self._input("model")
            return {
                "continued": lambda s, z: superzeta.superzeta_continued(model, s, z, options.mu),
                "integral": lambda s, z: superzeta.superzeta_integral_rep(model, s, z),
                "mellin-series": lambda s, z: superzeta.superzeta_mellin_series(model, s, z),
                "derivative-rep": lambda s, z: superzeta.superzeta_derivative_rep(model, s, z, options.m),
            }[options.evaluation]

        if command == "eval-det":
            model = self._input("model")
            return lambda s, z: superzeta.regularized_det_result(model, z, options.method)

        if command == "voros":
            expansion, data = self._input("expansion"), self._input("hadamard")
            voros = VorosService(self.context)
            return lambda s, z: voros.voros_superzeta(expansion, data, s, z, options.k0)

        if command in ("selberg-odd", "selberg-even"):
            key = command.replace("-", "_")
            spec, model = self._input(key), self._input("model")
            if options.split:
                return lambda s, z: selberg_service.selberg_split(
                    spec, model, s, z, self.context, shifted=options.shifted
                )
            if command == "selberg-odd":
                return lambda s, z: selberg_service.odd_nontrivial_superzeta(
                    spec, model, s, z, self.context, shifted=options.shifted
                )
            return lambda s, z: selberg_service.even_nontrivial_superzeta(spec, model, s, z, self.context)

        if command == "kleinian":
            params = self._input("kleinian")

            def kleinian(s: complex, z: complex) -> SuperzetaResult:
                constants = selberg_service.kleinian_constants(params, s)
                flags = {key: [value.real, value.imag] for key, value in asdict(constants).items()}
                return SuperzetaResult(constants.phi_quotient_prefactor, 0.0, flags)

            return kleinian

        raise InputParseError("command has no grid evaluator", command=command)

    def _grid_points(self) -> List[Tuple[complex, complex]]:
        pairs = self.config.grid.pairs()
        if self.config.command != "residues":
            return pairs
        return [(complex(n), z) for _, z in pairs for n in self.config.options.orders]

    def _residue_evaluator(self) -> Callable[[complex, complex], SuperzetaResult]:
        model = self._input("model")
        superzeta = SuperzetaService(self.context)

        def residue(s: complex, z: complex) -> SuperzetaResult:
            n = int(s.real)
            extracted = superzeta.extract_i_residue(model, n, z)
            expected = superzeta.i_residue(model, n, z)
            flags = dict(extracted.branch_flags, closed_form=[expected.real, expected.imag])
            return SuperzetaResult(extracted.value, extracted.est_error, flags)

        return residue

    def evaluate(self, threads: int = 1) -> List[SuperzetaResult]:
        points = self._grid_points()
        evaluator = self._residue_evaluator() if self.config.command == "residues" else self._evaluator()
        logger.info("{}: {} grid points on {} thread(s)", self.config.command, len(points), threads)
        if threads <= 1:
            return [evaluator(s, z) for s, z in points]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # map keeps input order
            return list(pool.map(lambda point: evaluator(*point), points))

    def table(self, results: List[SuperzetaResult], output_format: str) -> pd.DataFrame:
        points = self._grid_points()
        frame = pd.DataFrame(
            [
                [s.real, s.imag, z.real, z.imag, r.value.real, r.value.imag, r.est_error]
                for (s, z), r in zip(points, results)
            ],
            columns=CSV_COLUMNS,
        )
        if output_format == "json":
            frame["branch_flags"] = [json.dumps(r.branch_flags, sort_keys=True, default=str) for r in results]
        return frame

    def check_accuracy(self, results: List[SuperzetaResult]) -> None:
        target = self.context.target_rel_error
        for (s, z), result in zip(self._grid_points(), results):
            if result.est_error > target * max(1.0, abs(result.value)):
                raise AccuracyError(
                    "estimated error above target", s=s, z=z, est_error=result.est_error, target=target
                )

    def verify(self) -> pd.DataFrame:
        results = VerificationService(self.context).run(self.config.suite)
        logger.info("suite {}: {}", self.config.suite, summarize(results))
        return pd.DataFrame([asdict(r) for r in results], columns=CHECK_COLUMNS)


def write_table(frame: pd.DataFrame, path: Optional[str], output_format: str) -> None:
    if output_format == "json":
        text = frame.to_json(orient="records", double_precision=15, indent=2)
    else:
        text = frame.to_csv(index=False, float_format="%.17g")
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(
    config: JobConfig,
    base_dir: Optional[Path] = None,
    out: Optional[str] = None,
    output_format: Optional[str] = None,
    threads: int = 1,
    overrides: Optional[Dict[str, Any]] = None,
) -> int:
    """Run a job and return its exit status; diagnostics go to standard error as one JSON line."""
    output_format = output_format or config.output.format
    out = out or config.output.path
    try:
        service = JobService(config, base_dir, overrides)
        if config.command == "verify":
            frame = service.verify()
            write_table(frame, out, output_format)
            if not frame["passed"].all():
                failed = frame.loc[~frame["passed"], "name"].tolist()
                raise AccuracyError("verification checks failed", suite=config.suite, failed=failed)
            return 0
        results = service.evaluate(threads)
        write_table(service.table(results, output_format), out, output_format)
        service.check_accuracy(results)
        return 0
    except SuperzetaError as error:
        sys.stderr.write(diagnostic_line(error) + "\n")
        return error.exit_code
