import time
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence
import numpy as np
from utils.core.models import CuttingPlan, Instance, Lay
from utils.core.metrics import check_lay_dimensions, validate_instance
from utils.solver.construction import create_lays
from exceptions.exceptions import InstanceValidationError

logger = logging.getLogger("hfsc")


# --- Types ---


@dataclass(frozen=True)
class SolveConfig:
    """time_limit is in seconds; None means no budget."""
    time_limit: Optional[float] = None
    record_trace: bool = False

    def __post_init__(self):
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


@dataclass(frozen=True)
class TraceEvent:
    elapsed: float
    best_count: int
    lay_count: int


@dataclass(frozen=True)
class SolveResult:
    plan: CuttingPlan
    elapsed: float
    initial_k: int
    improved: bool
    timed_out: bool = False
    trace: tuple[TraceEvent, ...] = field(default_factory=tuple)


# --- Functions ---


def covered_demand(lays: Sequence[Lay], inst: Instance) -> np.ndarray:
    """g×f matrix of SKUs cut by the given lays."""
    covered = np.zeros((inst.g, inst.f), dtype=np.int64)
    for lay in lays:
        check_lay_dimensions(lay, inst)
        covered += lay.production()
    return covered


def solve(inst: Instance, cfg: SolveConfig = SolveConfig()) -> SolveResult:
    """
    Builds a plan greedily, then tries to shrink it.

    Each pass takes the current lays in order and, for each one, rebuilds the
    demand covered by all the others from scratch. When the rebuild needs at
    least two lays fewer than the others did, the taken lay is kept aside for
    good, the rebuild becomes the current lay set and the pass restarts. The
    loop ends after a pass with no such extraction, or when the budget runs
    out; the budget is checked before each rebuild, so the result is always a
    complete plan.

    Raises:
        InstanceValidationError: If the instance does not validate.
        ConstructionStallError: If construction gets stuck.
    """
    report = validate_instance(inst)
    if not report.valid:
        raise InstanceValidationError(report, name=inst.name)

    start = time.perf_counter()
    deadline = None if cfg.time_limit is None else start + cfg.time_limit
    lengths = inst.lengths_vector()

    def rebuild(demand: np.ndarray) -> list[Lay]:
        return create_lays(demand, lengths, inst.bed_length, inst.bed_height)

    lay_set = rebuild(inst.demand_matrix())
    initial_k = len(lay_set)
    logger.debug(f"{inst.name}: construction gave {initial_k} lays")

    kept: list[Lay] = []
    trace: list[TraceEvent] = []
    timed_out = False
    changed = True
    while changed and not timed_out:
        changed = False
        for k, extracted in enumerate(lay_set):
            if deadline is not None and time.perf_counter() >= deadline:
                timed_out = True
                break
            others = lay_set[:k] + lay_set[k + 1:]
            rebuilt = rebuild(covered_demand(others, inst))
            if len(rebuilt) + 1 < len(lay_set):
                kept.append(extracted)
                lay_set = rebuilt
                changed = True
                logger.debug(
                    f"{inst.name}: extracted lay {k}, plan now {len(kept) + len(lay_set)} lays"
                )
                if cfg.record_trace:
                    trace.append(TraceEvent(
                        elapsed=time.perf_counter() - start,
                        best_count=len(kept),
                        lay_count=len(lay_set),
                    ))
                break

    plan = CuttingPlan.from_lays(inst, kept + lay_set)
    elapsed = time.perf_counter() - start
    if timed_out:
        logger.info(f"{inst.name}: time limit reached after {elapsed:.1f}s")
    logger.info(f"{inst.name}: k={plan.k} (construction {initial_k}) in {elapsed:.2f}s")
    return SolveResult(
        plan=plan,
        elapsed=elapsed,
        initial_k=initial_k,
        improved=plan.k < initial_k,
        timed_out=timed_out,
        trace=tuple(trace),
    )
