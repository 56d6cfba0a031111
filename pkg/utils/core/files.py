import logging
from pathlib import Path
from pydantic import ValidationError
from utils.core.enums import ViolationKind
from utils.core.models import CuttingPlan, Instance, ValidationReport, Violation
from exceptions.exceptions import InstanceValidationError, PlanValidationError

logger = logging.getLogger("hfsc")


def _unreadable(path: Path, e: ValidationError) -> ValidationReport:
    violations = [
        Violation(
            kind=ViolationKind.SHAPE,
            message=f"{path.name}: {'.'.join(str(p) for p in err['loc'])}: {err['msg']}",
        )
        for err in e.errors()
    ]
    return ValidationReport.from_violations(violations)


def load_instance(path: str | Path) -> Instance:
    """
    Reads an instance file (keys name, l_ub, h_ub, lengths, demand).

    Raises:
        InstanceValidationError: If the JSON does not have the instance format.
    """
    path = Path(path)
    try:
        return Instance.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise InstanceValidationError(_unreadable(path, e), name=str(path))


def save_instance(inst: Instance, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(inst.model_dump_json(by_alias=True, indent=2) + "\n", encoding="utf-8")
    logger.debug(f"Wrote instance {inst.name} to {path}")
    return path


def load_plan(path: str | Path) -> CuttingPlan:
    """
    Reads a plan file (keys instance, lays, k, mean_ur).

    Raises:
        PlanValidationError: If the JSON does not have the plan format.
    """
    path = Path(path)
    try:
        return CuttingPlan.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise PlanValidationError(_unreadable(path, e), case=str(path))


def save_plan(plan: CuttingPlan, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(plan.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.debug(f"Wrote plan for {plan.instance} ({plan.k} lays) to {path}")
    return path
