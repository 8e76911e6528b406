import argparse
import sys
from pathlib import Path
from typing import List, Optional

# Add the project root directory to Python path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from config.log_setup import configure_logging
from config.settings import APP_NAME, APP_VERSION, DEBUG, DEFAULT_THREADS, LOG_FILE, LOG_LEVEL, OUTPUT_FORMATS
from pydantic import ValidationError

from src.exceptions import InputParseError, SuperzetaError
from src.schemas.job import JobConfig
from src.services.job_service import diagnostic_line, load_job, run


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superzeta",
        description=f"{APP_NAME} {APP_VERSION}: superzeta functions, regularized determinants and checks",
    )
    parser.add_argument("--config", type=Path, help="job file (.json or .toml)")
    parser.add_argument("--out", help="output path; standard output when omitted")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="output table format")
    parser.add_argument("--target-rel-error", type=float, help="override the target relative error")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="grid points evaluated in parallel")
    parser.add_argument("--suite", help="verification suite; runs 'verify' directly without --config")
    parser.add_argument("--log-level", default="DEBUG" if DEBUG else LOG_LEVEL, help="loguru level for standard error")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, LOG_FILE)
    try:
        if args.config is not None:
            config = load_job(args.config)
            if args.suite:
                config = JobConfig.model_validate({**config.model_dump(), "command": "verify", "suite": args.suite})
            base_dir = args.config.parent
        elif args.suite:
            config = JobConfig.model_validate({"command": "verify", "suite": args.suite})
            base_dir = Path.cwd()
        else:
            build_parser().print_usage(sys.stderr)
            return 1
    except ValidationError as exc:
        error = InputParseError(f"invalid job: {exc.errors()[0]['msg']}")
        sys.stderr.write(diagnostic_line(error) + "\n")
        return error.exit_code
    except SuperzetaError as error:
        sys.stderr.write(diagnostic_line(error) + "\n")
        return error.exit_code

    return run(
        config,
        base_dir=base_dir,
        out=args.out,
        output_format=args.format,
        threads=max(1, args.threads),
        overrides={"target_rel_error": args.target_rel_error},
    )


if __name__ == "__main__":
    sys.exit(main())
