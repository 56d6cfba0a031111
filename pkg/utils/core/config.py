import os
import sys
import logging
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from a .env file
load_dotenv(override=True)


# --- Constants ---


REPO_ROOT = Path(__file__).resolve().parents[2]

# 0 disables the budget
DEFAULT_TIME_LIMIT: float = float(os.getenv("HFSC_TIME_LIMIT") or "1200")
DEFAULT_SEED: int = int(os.getenv("HFSC_SEED") or "1000000")
DEFAULT_JOBS: int = int(os.getenv("HFSC_JOBS") or "1")
LOG_LEVEL: str = (os.getenv("HFSC_LOG_LEVEL") or "INFO").upper()
TEMPLATES_DIR = Path(os.getenv("HFSC_TEMPLATES_DIR") or REPO_ROOT / "templates")


# --- Logging ---


def configure_logging(verbose: bool = False) -> logging.Logger:
    """
    Attaches a standard-error handler to the project logger.

    The level comes from HFSC_LOG_LEVEL unless verbose is set, in which case
    DEBUG is forced. Calling this more than once does not stack handlers.

    Args:
        verbose (bool): Force DEBUG logging.

    Returns:
        logging.Logger: The configured "hfsc" logger.
    """
    logger = logging.getLogger("hfsc")
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.INFO)
    logger.setLevel(level)
    # Drop the old handler without flushing: its stream may already be closed
    for stale in [h for h in logger.handlers if getattr(h, "_hfsc_cli", False)]:
        logger.removeHandler(stale)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler._hfsc_cli = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    return logger
