import logging
import numpy as np
from utils.core.enums import ViolationKind
from utils.core.models import CuttingPlan, Instance, Lay, ValidationReport, Violation
from exceptions.exceptions import DimensionMismatchError

logger = logging.getLogger("hfsc")

# Stored mean_ur values are floats round-tripped through JSON
UR_TOLERANCE = 1e-9


# --- Instance checks ---


def validate_instance(inst: Instance) -> ValidationReport:
    """
    Checks an instance's shape and values.

    Reports shape errors (empty or ragged demand, length vector of the wrong
    size, non-positive bed or template lengths, negative demand) and templates
    longer than the bed on figures that have demand. Never raises.
    """
    violations: list[Violation] = []

    if inst.bed_length < 1:
        violations.append(Violation(
            kind=ViolationKind.SHAPE, observed=inst.bed_length, required=1,
            message="bed length must be positive"))
    if inst.bed_height < 1:
        violations.append(Violation(
            kind=ViolationKind.SHAPE, observed=inst.bed_height, required=1,
            message="bed height must be positive"))

    g, f = inst.g, inst.f
    if g < 1 or f < 1:
        violations.append(Violation(
            kind=ViolationKind.SHAPE, observed=g if g < 1 else f, required=1,
            message="demand needs at least one garment figure and one fabric type"))
        return ValidationReport.from_violations(violations)

    if len(inst.lengths) != g:
        violations.append(Violation(
            kind=ViolationKind.SHAPE, observed=len(inst.lengths), required=g,
            message="lengths must have one entry per demand row"))

    for i, row in enumerate(inst.demand):
        if len(row) != f:
            violations.append(Violation(
                kind=ViolationKind.SHAPE, location=(i,), observed=len(row), required=f,
                message="demand row has the wrong number of fabric types"))
            continue
        for j, s in enumerate(row):
            if s < 0:
                violations.append(Violation(
                    kind=ViolationKind.SHAPE, location=(i, j), observed=s, required=0,
                    message="demand must be non-negative"))

    for i, length in enumerate(inst.lengths):
        if length < 1:
            violations.append(Violation(
                kind=ViolationKind.SHAPE, location=(i,), observed=length, required=1,
                message="template length must be positive"))
        elif (
            i < g
            and length > inst.bed_length
            and any(s != 0 for s in inst.demand[i])
        ):
            violations.append(Violation(
                kind=ViolationKind.LENGTH, location=(i,), observed=length,
                required=inst.bed_length,
                message="template is longer than the bed"))

    return ValidationReport.from_violations(violations)


# --- Lay metrics ---


def check_lay_dimensions(lay: Lay, inst: Instance) -> None:
    """Raises DimensionMismatchError unless the lay is g×f-compatible with inst."""
    if len(lay.heights) != inst.f:
        raise DimensionMismatchError("lay heights", inst.f, len(lay.heights))
    if len(lay.counts) != inst.g:
        raise DimensionMismatchError("lay counts", inst.g, len(lay.counts))


def lay_volume(lay: Lay, inst: Instance) -> int:
    """(Σ_i l_i·q_i)·(Σ_j h_j): pattern length times lay height."""
    check_lay_dimensions(lay, inst)
    return lay.volume(inst.lengths)


def utilization_rate(lay: Lay, inst: Instance) -> float:
    return lay_volume(lay, inst) / inst.bed_volume


def volume_lower_bound(inst: Instance) -> int:
    """
    No lay holds more than l_ub·h_ub of volume, so every feasible plan needs
    at least ceil(total demand volume / bed volume) lays.
    """
    total = int(inst.lengths_vector() @ inst.demand_matrix().sum(axis=1))
    return -(-total // inst.bed_volume)


def plan_waste_volume(plan: CuttingPlan, inst: Instance) -> int:
    """Unused bed volume summed over the plan's lays."""
    return sum(inst.bed_volume - lay_volume(lay, inst) for lay in plan.lays)


# --- Plan checks ---


def validate_plan(plan: CuttingPlan, inst: Instance) -> ValidationReport:
    """
    Checks that a plan cuts the demand exactly and that every lay fits the bed.

    Lays with the wrong dimensions are reported as shape violations and left
    out of the exactness sum. A stored k or mean_ur that disagrees with the
    lays is a shape violation too. Never raises.
    """
    inst_report = validate_instance(inst)
    if ViolationKind.SHAPE in inst_report.kinds():
        return inst_report

    violations: list[Violation] = []
    produced = np.zeros((inst.g, inst.f), dtype=np.int64)

    if plan.k != len(plan.lays):
        violations.append(Violation(
            kind=ViolationKind.SHAPE, observed=plan.k, required=len(plan.lays),
            message="k does not match the number of lays"))

    for k, lay in enumerate(plan.lays):
        try:
            check_lay_dimensions(lay, inst)
        except DimensionMismatchError as e:
            violations.append(Violation(
                kind=ViolationKind.SHAPE, location=(k,), observed=e.observed,
                required=e.expected, message=e.detail))
            continue

        if any(h < 0 for h in lay.heights) or any(q < 0 for q in lay.counts):
            violations.append(Violation(
                kind=ViolationKind.SHAPE, location=(k,),
                message="lay has negative heights or counts"))
            continue
        if lay.height == 0 or not any(lay.counts):
            violations.append(Violation(
                kind=ViolationKind.SHAPE, location=(k,),
                message="lay has zero height or no templates"))

        length = lay.pattern_length(inst.lengths)
        if length > inst.bed_length:
            violations.append(Violation(
                kind=ViolationKind.LENGTH, location=(k,), observed=length,
                required=inst.bed_length, message="pattern longer than the bed"))
        if lay.height > inst.bed_height:
            violations.append(Violation(
                kind=ViolationKind.HEIGHT, location=(k,), observed=lay.height,
                required=inst.bed_height, message="more layers than the bed allows"))

        produced += lay.production()

    demand = inst.demand_matrix()
    for i, j in zip(*np.nonzero(produced != demand)):
        violations.append(Violation(
            kind=ViolationKind.EXACTNESS, location=(int(i), int(j)),
            observed=int(produced[i, j]), required=int(demand[i, j]),
            message="produced count differs from demand"))

    if plan.lays and plan.k == len(plan.lays):
        expected_ur = sum(lay_volume(lay, inst) for lay in plan.lays
                          if len(lay.heights) == inst.f and len(lay.counts) == inst.g
                          ) / (inst.bed_volume * len(plan.lays))
        if abs(expected_ur - plan.mean_ur) > UR_TOLERANCE:
            violations.append(Violation(
                kind=ViolationKind.SHAPE, observed=plan.mean_ur, required=expected_ur,
                message="mean_ur does not match the lays"))

    report = ValidationReport.from_violations(violations)
    if not report.valid:
        logger.debug(f"Plan for {inst.name} has {len(violations)} violation(s)")
    return report
