"""Command-line entry point for the iterated-sequence toolkit."""
import argparse
import asyncio
import datetime
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from src import config
from src.runner import INPUT_ERROR, SUCCESS, VERIFICATION_FAILED, ToolkitRunner
from src.state.schema import CommandName, OutputFormat, RunConfig

EXIT_CODES = {SUCCESS: 0, INPUT_ERROR: 2, VERIFICATION_FAILED: 3}

logger = logging.getLogger(__name__)


class RunFormatter(logging.Formatter):
    """Console formatter; records carrying a ``report`` dict get a details block."""

    def format(self, record):
        message = record.getMessage()
        if hasattr(record, "report"):
            report = record.report
            if isinstance(report, dict):
                details = "\nReport Details:"
                for key, value in report.items():
                    details += f"\n- {key}: {value}"
                return f"[{record.levelname}] {message}{details}"
            return f"[{record.levelname}] {message}\nReport: {report}"
        return f"[{record.levelname}] {message}"


def setup_logging(level: str = "INFO", log_file: Optional[Path] = None) -> logging.Logger:
    """Console logging to stderr, plus a detailed file log when ``log_file`` is given."""
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(RunFormatter())
    root_logger.addHandler(console_handler)

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
        ))
        root_logger.addHandler(file_handler)

    module_logger = logging.getLogger(__name__)
    if log_file is not None:
        module_logger.debug(f"Detailed logs will be written to: {log_file}")
    return module_logger


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=2, help="Grassmannian parameter k")
    common.add_argument("--n", type=int, help="ambient dimension (or number of leaves)")
    common.add_argument("--steps", help="level steps, e.g. 4.5;2.3;2.3;1.2")
    common.add_argument("--sequence", help="full sequence text or JSON")
    common.add_argument("--tree", metavar="FILE", help="tree JSON file")
    common.add_argument("--other-steps", help="second sequence for 'compare'")
    common.add_argument("--format", dest="output_format", default="text",
                        choices=[f.value for f in OutputFormat])
    common.add_argument("--output", help="write the result to this file")
    common.add_argument("--oracle", action="store_true", help="cross-check against minor polynomials")
    common.add_argument("--path", action="store_true", help="include the tree-graph path")
    common.add_argument("--table1-order", action="store_true",
                        help="order Plücker rows 12, 13, 23, 14, 24, 34, ...")
    common.add_argument("--labeled", action="store_true", help="enumerate labeled trees")
    common.add_argument("--polytope", action="store_true", help="include polytope certificates in sweeps")
    common.add_argument("--sample", dest="sample_size", type=int, help="sample N sequences")
    common.add_argument("--seed", type=int, help="seed for sampling")
    common.add_argument("--jobs", type=int, help="worker processes for sweeps")
    common.add_argument("--log-level", default=None, help="logging level")

    parser = argparse.ArgumentParser(
        prog="itseq",
        description="Iterated sequences for Grassmannians: valuations, tree cones and polytope certificates.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for command in CommandName:
        commands.add_parser(command.value, parents=[common])
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    values: Dict = {k: v for k, v in vars(args).items() if k != "log_level"}
    defaults = config.get_run_defaults({"jobs": values.get("jobs")})
    values["jobs"] = defaults["jobs"]
    if values.get("sample_size") is not None and values.get("seed") is None:
        values["seed"] = defaults["seed"]
    return RunConfig(**values)


async def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    log_file = None
    if config.LOG_TO_FILE:
        stamp = datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = config.LOG_DIR / f"itseq_{stamp}.log"
    setup_logging((args.log_level or config.LOG_LEVEL).upper(), log_file)

    try:
        config.validate_config()
        cfg = build_run_config(args)
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CODES[INPUT_ERROR]

    if cfg.sample_size is not None:
        logger.info(f"Sampling {cfg.sample_size} sequences with seed {cfg.seed}")

    result = await ToolkitRunner().run(cfg)
    if result.get("output"):
        sys.stdout.write(result["output"])
    if result["status"] != SUCCESS:
        logger.error(result.get("error") or f"'{cfg.command.value}' finished with status {result['status']}")
    return EXIT_CODES[result["status"]]


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for the ``itseq`` console script."""
    return asyncio.run(run(argv))


if __name__ == "__main__":
    sys.exit(main())
