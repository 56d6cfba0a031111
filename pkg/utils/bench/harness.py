import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from itertools import repeat
from pathlib import Path
from typing import Iterable, Optional, Sequence
from utils.core.enums import GroupName, ViolationKind
from utils.core.models import CuttingPlan, Instance, ValidationReport, Violation
from utils.core.metrics import validate_plan, volume_lower_bound
from utils.solver.hfsc import SolveConfig, solve
from utils.bench.generator import GROUPS, GroupSpec, generate_suite, in_group_order
from exceptions.exceptions import EmptyGroupError, PlanValidationError

logger = logging.getLogger("hfsc")


# --- Constants ---


CASE_HEADER = ["group", "case", "k", "mean_ur_pct", "tc_seconds", "lower_bound"]
SUMMARY_HEADER = ["group", "cases", "mean_k", "mean_ur_pct", "min_k", "max_k", "mean_tc_seconds"]

# Published HFSC group means: (mean K, mean UR %)
REFERENCE_RESULTS: dict[GroupName, tuple[float, float]] = {
    GroupName.G1: (63.92, 63.19),
    GroupName.G2: (73.14, 70.72),
    GroupName.G3: (73.06, 71.06),
    GroupName.G4: (83.4, 76.01),
    GroupName.G5: (82.78, 76.57),
    GroupName.G6: (82.5, 76.75),
    GroupName.G7: (93.36, 79.85),
    GroupName.G8: (93.74, 80.31),
    GroupName.G9: (93.3, 80.27),
    GroupName.G10: (93.2, 80.37),
}
K_TOLERANCE_PCT = 3.0
UR_TOLERANCE_POINTS = 2.5

# Per-case G1 results outside this range are worth a look
G1_EXPECTED_K = (60, 68)


# --- Types ---


@dataclass(frozen=True)
class CaseResult:
    group: GroupName
    case_index: int
    k: int
    mean_ur: float
    tc: float
    lower_bound: int
    initial_k: int = 0


@dataclass(frozen=True)
class GroupSummary:
    group: GroupName
    cases: int
    mean_k: float
    mean_ur: float
    min_k: int
    max_k: int
    mean_tc: float


@dataclass(frozen=True)
class ReferenceDeviation:
    group: GroupName
    mean_k: float
    reference_k: float
    mean_ur_pct: float
    reference_ur_pct: float

    @property
    def k_deviation_pct(self) -> float:
        return 100.0 * (self.mean_k - self.reference_k) / self.reference_k

    @property
    def ur_deviation_points(self) -> float:
        return self.mean_ur_pct - self.reference_ur_pct

    @property
    def within_tolerance(self) -> bool:
        return (
            abs(self.k_deviation_pct) <= K_TOLERANCE_PCT
            and abs(self.ur_deviation_points) <= UR_TOLERANCE_POINTS
        )


# --- Running ---


def _solve_case(inst: Instance, cfg: SolveConfig) -> tuple[CuttingPlan, float, int]:
    result = solve(inst, cfg)
    return result.plan, result.elapsed, result.initial_k


def run_benchmark(
    groups: Sequence[GroupSpec],
    cases_per_group: int,
    seed: int,
    cfg: SolveConfig,
    jobs: int = 1,
    per_group_streams: bool = False,
) -> list[CaseResult]:
    """
    Generates the requested groups, solves every case and checks every plan.

    Plans are re-validated here rather than trusted from the solver. Cases may
    be solved in worker processes; results come back in case order either way.

    Raises:
        PlanValidationError: If any plan is infeasible or inexact, naming the case.
    """
    if cases_per_group < 1:
        raise ValueError(f"cases_per_group must be at least 1, got {cases_per_group}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")

    groups = in_group_order(groups)
    instances = generate_suite(groups, cases_per_group, seed, per_group_streams=per_group_streams)
    labels = [
        (spec.name, number)
        for spec in groups
        for number in range(1, cases_per_group + 1)
    ]

    if jobs == 1:
        outcomes: Iterable[tuple[CuttingPlan, float, int]] = map(_solve_case, instances, repeat(cfg))
        return _collect(instances, labels, outcomes)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return _collect(instances, labels, executor.map(_solve_case, instances, repeat(cfg)))


def _collect(
    instances: Sequence[Instance],
    labels: Sequence[tuple[GroupName, int]],
    outcomes: Iterable[tuple[CuttingPlan, float, int]],
) -> list[CaseResult]:
    results: list[CaseResult] = []
    for inst, (group, number), (plan, elapsed, initial_k) in zip(instances, labels, outcomes):
        report = validate_plan(plan, inst)
        if not report.valid:
            raise PlanValidationError(report, case=inst.name)
        lower_bound = volume_lower_bound(inst)
        if plan.k < lower_bound:
            raise PlanValidationError(
                ValidationReport.from_violations([Violation(
                    kind=ViolationKind.SHAPE, observed=plan.k, required=lower_bound,
                    message="fewer lays than the volume lower bound")]),
                case=inst.name,
            )

        logger.info(
            f"{inst.name}: k={plan.k} initial={initial_k} lb={lower_bound} "
            f"ur={100 * plan.mean_ur:.2f}% tc={elapsed:.2f}s"
        )
        if group is GroupName.G1 and not G1_EXPECTED_K[0] <= plan.k <= G1_EXPECTED_K[1]:
            logger.warning(f"{inst.name}: k={plan.k} outside the expected G1 range {G1_EXPECTED_K}")

        results.append(CaseResult(
            group=group,
            case_index=number,
            k=plan.k,
            mean_ur=plan.mean_ur,
            tc=elapsed,
            lower_bound=lower_bound,
            initial_k=initial_k,
        ))
    return sorted(results, key=_result_order)


def _group_position(group: GroupName) -> int:
    return list(GROUPS).index(group)


def _result_order(result: CaseResult) -> tuple[int, int]:
    return _group_position(result.group), result.case_index


# --- Aggregation ---


def summarize(
    results: Sequence[CaseResult],
    groups: Optional[Sequence[GroupName]] = None,
    pooled: bool = False,
) -> list[GroupSummary]:
    """
    Per-group means and extrema, in G1..G10 order.

    mean_ur is the mean of per-case mean URs. With pooled, it is instead the
    mean over every lay of the group, i.e. case URs weighted by k.

    Args:
        results: Case results, in any order.
        groups: Groups to summarize; defaults to those present in results.
        pooled: Use the per-lay UR roll-up.

    Raises:
        EmptyGroupError: If a requested group has no results.
    """
    if groups is None:
        groups = sorted({r.group for r in results}, key=_group_position)
        if not groups:
            raise EmptyGroupError("any")

    summaries = []
    for group in groups:
        members = sorted((r for r in results if r.group == group), key=_result_order)
        if not members:
            raise EmptyGroupError(group.value)
        ks = [r.k for r in members]
        if pooled and sum(ks):
            mean_ur = sum(r.k * r.mean_ur for r in members) / sum(ks)
        else:
            mean_ur = sum(r.mean_ur for r in members) / len(members)
        summaries.append(GroupSummary(
            group=group,
            cases=len(members),
            mean_k=sum(ks) / len(members),
            mean_ur=mean_ur,
            min_k=min(ks),
            max_k=max(ks),
            mean_tc=sum(r.tc for r in members) / len(members),
        ))
    return summaries


def reference_deviations(summaries: Sequence[GroupSummary]) -> list[ReferenceDeviation]:
    return [
        ReferenceDeviation(
            group=s.group,
            mean_k=s.mean_k,
            reference_k=REFERENCE_RESULTS[s.group][0],
            mean_ur_pct=100.0 * s.mean_ur,
            reference_ur_pct=REFERENCE_RESULTS[s.group][1],
        )
        for s in summaries
    ]


# --- Reports ---


def two_places(value: float) -> str:
    """Rounds half up to 2 decimals, starting from the shortest repr of value."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def percent(ratio: float) -> str:
    return str((Decimal(repr(ratio)) * 100).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def summary_path_for(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}_summary{path.suffix or '.csv'}")


def write_report(
    summaries: Sequence[GroupSummary],
    results: Sequence[CaseResult],
    path: str | Path,
    timings: bool = True,
) -> tuple[Path, Path]:
    """
    Writes the case CSV to path and the group summary next to it as
    <stem>_summary.csv. Rows follow group order, then case index. With
    timings off the tc columns are left empty, which makes the files
    byte-identical across reruns.

    Returns:
        tuple[Path, Path]: The case file and the summary file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    summary_path = summary_path_for(path)

    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CASE_HEADER)
        for r in sorted(results, key=_result_order):
            writer.writerow([
                r.group.value,
                r.case_index,
                r.k,
                percent(r.mean_ur),
                two_places(r.tc) if timings else "",
                r.lower_bound,
            ])

    with summary_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for s in sorted(summaries, key=lambda s: _group_position(s.group)):
            writer.writerow([
                s.group.value,
                s.cases,
                two_places(s.mean_k),
                percent(s.mean_ur),
                s.min_k,
                s.max_k,
                two_places(s.mean_tc) if timings else "",
            ])

    logger.info(f"Wrote {len(results)} case rows to {path} and {len(summaries)} group rows to {summary_path}")
    return path, summary_path
