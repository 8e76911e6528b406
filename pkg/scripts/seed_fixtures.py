import json
import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from loguru import logger

from config.settings import FIXTURE_PATH
from src.schemas.inputs import ExpansionInput, HadamardInput, SelbergEvenInput, SelbergOddInput
from src.services.verification_service import synthetic_even_spec, synthetic_odd_spec
from src.services.voros_service import reciprocal_gamma_expansion

VERIFY_JOB_TOML = """command = "verify"
suite = "binomial"

[output]
format = "csv"
"""


def _pair(value: complex):
    value = complex(value)
    return value.real if value.imag == 0 else [value.real, value.imag]


def fixture_documents() -> dict:
    """Canonical inputs keyed by file name."""
    expansion, hadamard = reciprocal_gamma_expansion()
    odd, even = synthetic_odd_spec(), synthetic_even_spec()
    documents = {
        "dirichlet_polynomial.json": {"builtin": "dirichlet-polynomial", "a": 2.0},
        "dirichlet_series.json": {
            "kind": "dirichlet",
            "terms": [[-1.0 / n, 0.0, 2.0 ** n] for n in range(1, 61)],
            "kappa": 1.0,
            "sigma": 0.0,
        },
        "reciprocal_gamma_expansion.json": ExpansionInput(
            m=expansion.m,
            a_tilde=[_pair(a) for a in expansion.a_tilde],
            b=[_pair(b) for b in expansion.b],
            power_terms=[(_pair(a), mu) for a, mu in expansion.power_terms],
            sector_theta=expansion.sector_theta,
        ).model_dump(),
        "reciprocal_gamma_hadamard.json": HadamardInput.model_validate({
            "zeros": {"progressions": [{"start": -1.0, "order": 1.0}], "kappa": 1.0},
            "m": hadamard.m,
            "r": hadamard.r,
        }).model_dump(),
        "selberg_odd.json": SelbergOddInput(
            n=odd.n, k=odd.k, d_c_chi=odd.d_c_chi, d_sigma_k=odd.d_sigma_k, e_dk=odd.e_dk, a_k=odd.a_k,
            scattering_poles=[{"q": _pair(p.q), "b": p.b} for p in odd.scattering_poles],
        ).model_dump(),
        "selberg_even.json": SelbergEvenInput(
            n=even.n, k=even.k, d_c_chi=even.d_c_chi, d_sigma_k=even.d_sigma_k, d_dk=even.d_dk,
            dim_v_chi=even.dim_v_chi, euler_char=even.euler_char,
            scattering_poles=[{"q": _pair(p.q), "b": p.b} for p in even.scattering_poles],
        ).model_dump(),
        "kleinian_case1.json": {"index_case": 1, "c0_abs": 1.0, "m_c0": 1, "lattice_coarea": 1.0},
        "kleinian_case2.json": {"index_case": 2, "c0_abs": 1.0, "m_c0": 1, "lattice_coarea": 1.0},
        "job_eval_superzeta.json": {
            "command": "eval-superzeta",
            "inputs": {"model": "dirichlet_polynomial.json"},
            "grid": {"points": [[2.0, 1.0]], "rect": {"s": [1.5, 2.5], "z": [1.0, [1.0, 1.0]]}},
            "output": {"format": "csv"},
        },
        "job_selberg_odd_split.json": {
            "command": "selberg-odd",
            "inputs": {"selberg_odd": "selberg_odd.json", "model": "dirichlet_series.json"},
            "grid": {"points": [[0.5, 3.5], [2.5, 3.5]]},
            "options": {"split": True},
            "output": {"format": "json"},
        },
        "job_voros.json": {
            "command": "voros",
            "inputs": {"expansion": "reciprocal_gamma_expansion.json", "hadamard": "reciprocal_gamma_hadamard.json"},
            "grid": {"rect": {"s": [-1.5, -1.0, -0.5, 0.5], "z": [1.5, 2.0, 3.0]}},
            "output": {"format": "json"},
        },
    }
    return documents


def seed_fixtures(target: Path = FIXTURE_PATH) -> None:
    """Write every fixture document below `target`."""
    target.mkdir(parents=True, exist_ok=True)
    for name, document in fixture_documents().items():
        (target / name).write_text(json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    (target / "job_verify_binomial.toml").write_text(VERIFY_JOB_TOML, encoding="utf-8")
    logger.info("wrote fixtures to {}", target)


if __name__ == "__main__":
    print("🚀 Writing fixture inputs...")
    seed_fixtures()
    print(f"✅ Fixtures written to {FIXTURE_PATH}")
