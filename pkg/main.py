import sys
import logging
import argparse
from typing import Callable, Optional, Sequence
from commands import bench, generate, render, solve, validate
from exceptions.exceptions import (
    ConstructionStallError,
    HfscError,
    InstanceValidationError,
    InvalidArgumentsError,
    PlanValidationError,
)
from utils.core.config import configure_logging

logger = logging.getLogger("hfsc")


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so every failure goes
    through the same exception handlers."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InvalidArgumentsError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="hfsc",
        description="Plan fabric spreading and cutting lays for garment orders.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)
    for command in (generate, solve, validate, bench, render):
        command.register(subparsers)
    return parser


# --- Exception Handling ---


ExceptionHandler = Callable[[BaseException], int]
_handlers: dict[type[BaseException], ExceptionHandler] = {}


def exception_handler(exc_type: type[BaseException]) -> Callable[[ExceptionHandler], ExceptionHandler]:
    def decorator(func: ExceptionHandler) -> ExceptionHandler:
        _handlers[exc_type] = func
        return func
    return decorator


def handle_exception(exc: BaseException) -> int:
    # Most specific registered class wins
    for klass in type(exc).__mro__:
        if klass in _handlers:
            return _handlers[klass](exc)
    raise exc


@exception_handler(HfscError)
def hfsc_error_handler(exc: BaseException) -> int:
    assert isinstance(exc, HfscError)
    logger.error(exc.detail)
    return exc.exit_code


@exception_handler(InstanceValidationError)
@exception_handler(PlanValidationError)
def validation_error_handler(exc: BaseException) -> int:
    assert isinstance(exc, (InstanceValidationError, PlanValidationError))
    logger.error(exc.detail)
    for violation in exc.report.violations:
        print(violation, file=sys.stderr)
    return exc.exit_code


@exception_handler(ConstructionStallError)
def stall_error_handler(exc: BaseException) -> int:
    assert isinstance(exc, ConstructionStallError)
    logger.error(exc.detail)
    logger.debug(f"Stuck entries: {exc.stuck}")
    return exc.exit_code


@exception_handler(OSError)
def os_error_handler(exc: BaseException) -> int:
    logger.error(f"File error: {exc}")
    return 1


@exception_handler(Exception)
def unexpected_error_handler(exc: BaseException) -> int:
    logger.error("Unexpected error", exc_info=exc)
    return 1


# --- Entry Point ---


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses arguments, runs the chosen command, and maps failures to exit codes.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name;
            defaults to sys.argv[1:].

    Returns:
        int: 0 on success, 1 for bad arguments or I/O, 2 for validation
            failures, 3 when construction stalls.
    """
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        configure_logging(verbose=args.verbose)
        return args.handler(args)
    except Exception as exc:
        return handle_exception(exc)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
