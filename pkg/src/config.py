"""Configuration management for the iterated-sequence toolkit."""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
SRC_DIR = PROJECT_ROOT / "src"
OUTPUT_DIR = Path(os.getenv("ITSEQ_OUTPUT_DIR", str(PROJECT_ROOT / "output")))
LOG_DIR = Path(os.getenv("ITSEQ_LOG_DIR", str(PROJECT_ROOT / "logs")))

# Logging
LOG_LEVEL = os.getenv("ITSEQ_LOG_LEVEL", "INFO").upper()
LOG_TO_FILE = os.getenv("ITSEQ_LOG_FILE", "1").lower() not in ("0", "false", "no")

# Sweep defaults, read from ITSEQ_JOBS and ITSEQ_SEED by validate_config()
JOBS = 1
SEED = 0

DEFAULT_RUN_CONFIG = {
    "jobs": JOBS,
    "seed": SEED,
    "output_format": "text",
}

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def validate_config():
    """Validate the configuration and ensure output directories exist."""
    global JOBS, SEED
    JOBS = _env_int("ITSEQ_JOBS", 1)
    SEED = _env_int("ITSEQ_SEED", 0)
    DEFAULT_RUN_CONFIG.update(jobs=JOBS, seed=SEED)

    if JOBS < 1:
        raise ValueError("ITSEQ_JOBS must be a positive integer")
    if SEED < 0:
        raise ValueError("ITSEQ_SEED must be non-negative")
    if LOG_LEVEL not in _LOG_LEVELS:
        raise ValueError(f"ITSEQ_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")

    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    if LOG_TO_FILE:
        LOG_DIR.mkdir(parents=True, exist_ok=True)

    return True


def get_run_defaults(overrides=None):
    """Get run defaults with optional overrides."""
    config = DEFAULT_RUN_CONFIG.copy()
    if overrides:
        config.update({k: v for k, v in overrides.items() if v is not None})
    return config
