import io
import sys
import logging
import pickle
import pytest
from main import build_parser, handle_exception, run_cli
from utils.core.config import configure_logging
from utils.core.enums import ViolationKind
from utils.core.models import ValidationReport, Violation
from exceptions.exceptions import (
    ConstructionStallError,
    HfscError,
    InstanceValidationError,
    InvalidArgumentsError,
    InvalidGroupError,
    PlanValidationError,
)


def test_parser_requires_a_command():
    with pytest.raises(InvalidArgumentsError):
        build_parser().parse_args([])


def test_unknown_option_is_an_argument_error():
    with pytest.raises(InvalidArgumentsError):
        build_parser().parse_args(["solve", "x.json", "--bogus"])


def test_missing_argument_exits_one(capsys):
    assert run_cli(["validate", "only_one.json"]) == 1
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize(
    "exc, code",
    [
        (InvalidGroupError("G0"), 1),
        (ConstructionStallError([(0, 0, 3)]), 3),
        (FileNotFoundError("missing.json"), 1),
        (RuntimeError("boom"), 1),
    ],
)
def test_exit_codes(exc, code):
    assert handle_exception(exc) == code


def test_validation_errors_list_violations(capsys):
    report = ValidationReport.from_violations([
        Violation(kind=ViolationKind.SHAPE, location=(2, 1), observed=-1, required=0, message="negative"),
    ])
    assert handle_exception(InstanceValidationError(report, name="inst.json")) == 2
    assert "shape[2,1]" in capsys.readouterr().err
    assert handle_exception(PlanValidationError(report, case="G1_case01")) == 2


def test_keyboard_interrupt_is_not_swallowed():
    with pytest.raises(KeyboardInterrupt):
        handle_exception(KeyboardInterrupt())


def test_errors_survive_pickling():
    stall = pickle.loads(pickle.dumps(ConstructionStallError([(1, 2, 3)])))
    assert isinstance(stall, ConstructionStallError)
    assert stall.stuck == [(1, 2, 3)]
    assert stall.exit_code == 3

    report = ValidationReport.from_violations([Violation(kind=ViolationKind.EXACTNESS)])
    plan_error = pickle.loads(pickle.dumps(PlanValidationError(report, case="G2_case07")))
    assert plan_error.case == "G2_case07"
    assert plan_error.report == report
    assert str(plan_error) == plan_error.detail


def test_base_error_default_code():
    assert HfscError("x").exit_code == 1


# --- Logging setup ---


def test_run_cli_twice_reports_both_failures(capsys):
    assert run_cli(["validate", "only_one.json"]) == 1
    assert "usage" in capsys.readouterr().err
    assert run_cli(["generate", "--group", "G11", "--out", "unused"]) == 1
    assert "G11" in capsys.readouterr().err


def test_reconfiguring_after_stream_closed(monkeypatch):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    configure_logging()
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    logger = configure_logging()
    logger.warning("still logging")
    assert "still logging" in second.getvalue()
    assert sum(getattr(h, "_hfsc_cli", False) for h in logger.handlers) == 1


def test_verbose_forces_debug():
    assert configure_logging(verbose=True).level == logging.DEBUG
