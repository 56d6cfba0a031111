import argparse
from typing import Optional
from utils.core.config import DEFAULT_TIME_LIMIT


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def non_negative_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {number}")
    return number


def positive_float(value: str) -> float:
    number = non_negative_float(value)
    if number == 0:
        raise argparse.ArgumentTypeError("expected a positive number, got 0")
    return number


def add_time_limit_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--time-limit",
        type=non_negative_float,
        default=DEFAULT_TIME_LIMIT,
        metavar="SECONDS",
        help=f"Solver budget per case in seconds; 0 means unlimited (default {DEFAULT_TIME_LIMIT:g})",
    )


def time_limit(seconds: float) -> Optional[float]:
    """0 means unlimited."""
    return None if seconds == 0 else seconds
