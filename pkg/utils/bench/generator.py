"""
Reproducible benchmark instances: ten groups of 30 garment figures
(5 styles × 6 sizes) by 5 fabric types on a 720 × 160 bed, with demands
drawn uniformly from group-specific bounds.

Draws come from splitmix64 with rejection sampling, so the same seed gives
the same instances in any implementation of the same recurrence.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence
from utils.core.enums import GroupName
from utils.core.files import save_instance
from utils.core.models import Instance
from exceptions.exceptions import InvalidGroupError

logger = logging.getLogger("hfsc")


# --- Constants ---


MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

BED_LENGTH = 720
BED_HEIGHT = 160
FABRIC_TYPES = 5
FIGURE_LENGTHS: tuple[int, ...] = (
    60, 63, 66, 69, 73, 76,
    69, 72, 75, 78, 82, 86,
    80, 83, 86, 90, 94, 98,
    90, 94, 98, 102, 106, 110,
    99, 103, 107, 111, 115, 120,
)


# --- Types ---


@dataclass(frozen=True)
class GroupSpec:
    name: GroupName
    lb: int
    ub: int

    def __post_init__(self):
        if not 0 < self.lb <= self.ub:
            raise ValueError(f"group {self.name.value} needs 0 < lb <= ub, got ({self.lb}, {self.ub})")


@dataclass(frozen=True)
class GeneratorState:
    state: int

    def __post_init__(self):
        if not 0 <= self.state <= MASK64:
            raise ValueError("generator state must fit in 64 unsigned bits")

    @classmethod
    def seeded(cls, seed: int) -> "GeneratorState":
        return cls(seed & MASK64)


GROUPS: dict[GroupName, GroupSpec] = {
    spec.name: spec
    for spec in (
        GroupSpec(GroupName.G1, 300, 400),
        GroupSpec(GroupName.G2, 300, 600),
        GroupSpec(GroupName.G3, 400, 500),
        GroupSpec(GroupName.G4, 300, 800),
        GroupSpec(GroupName.G5, 400, 700),
        GroupSpec(GroupName.G6, 500, 600),
        GroupSpec(GroupName.G7, 300, 1000),
        GroupSpec(GroupName.G8, 400, 900),
        GroupSpec(GroupName.G9, 500, 800),
        GroupSpec(GroupName.G10, 600, 700),
    )
}


def get_group(name: str) -> GroupSpec:
    """Looks a group up by name, case-insensitively ("g1" or "G1")."""
    try:
        return GROUPS[GroupName(name.upper())]
    except ValueError:
        raise InvalidGroupError(name)


def parse_groups(value: str) -> list[GroupSpec]:
    """Parses "all" or a comma-separated list such as "G1,G3"."""
    if value.strip().lower() == "all":
        return list(GROUPS.values())
    return in_group_order(get_group(part.strip()) for part in value.split(",") if part.strip())


def in_group_order(groups: Iterable[GroupSpec]) -> list[GroupSpec]:
    """Drops repeats and puts groups in G1..G10 order."""
    order = list(GROUPS)
    unique = {spec.name: spec for spec in groups}
    return sorted(unique.values(), key=lambda spec: order.index(spec.name))


# --- Random stream ---


def next_u64(st: GeneratorState) -> tuple[int, GeneratorState]:
    state = (st.state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), GeneratorState(state)


def uniform_int(st: GeneratorState, lo: int, hi: int) -> tuple[int, GeneratorState]:
    """Unbiased draw from [lo, hi]; outputs at or above the largest multiple
    of the range size below 2^64 are rejected and redrawn."""
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    size = hi - lo + 1
    limit = ((1 << 64) // size) * size
    while True:
        value, st = next_u64(st)
        if value < limit:
            return lo + value % size, st


def derive_group_seed(master_seed: int, group_index: int) -> int:
    """Sub-seed for generating one group independently of the others."""
    value, _ = next_u64(GeneratorState.seeded(master_seed + group_index))
    return value


# --- Instances ---


def case_name(spec: GroupSpec, case_number: int) -> str:
    return f"{spec.name.value}_case{case_number:02d}"


def generate_case(spec: GroupSpec, st: GeneratorState, name: str | None = None) -> tuple[Instance, GeneratorState]:
    """Draws a 30×5 demand matrix row by row (figure-major, fabric-minor)."""
    demand: list[tuple[int, ...]] = []
    for _ in FIGURE_LENGTHS:
        row: list[int] = []
        for _ in range(FABRIC_TYPES):
            value, st = uniform_int(st, spec.lb, spec.ub)
            row.append(value)
        demand.append(tuple(row))
    inst = Instance(
        name=name or spec.name.value,
        bed_length=BED_LENGTH,
        bed_height=BED_HEIGHT,
        lengths=FIGURE_LENGTHS,
        demand=tuple(demand),
    )
    return inst, st


def _generate_cases(spec: GroupSpec, cases: int, st: GeneratorState) -> tuple[list[Instance], GeneratorState]:
    if cases < 1:
        raise ValueError(f"cases must be at least 1, got {cases}")
    instances = []
    for number in range(1, cases + 1):
        inst, st = generate_case(spec, st, name=case_name(spec, number))
        instances.append(inst)
    return instances, st


def generate_group(spec: GroupSpec, cases: int, seed: int) -> list[Instance]:
    instances, _ = _generate_cases(spec, cases, GeneratorState.seeded(seed))
    return instances


def generate_suite(
    groups: Sequence[GroupSpec],
    cases: int,
    seed: int,
    per_group_streams: bool = False,
) -> list[Instance]:
    """
    Generates several groups, always in G1..G10 order.

    The order the groups are listed in does not matter. By default one stream seeded with seed runs through all groups, so G1..G10
    from seed 1000000 continue each other. With per_group_streams each group
    starts from derive_group_seed(seed, index), where index is the group's
    position in G1..G10.
    """
    instances: list[Instance] = []
    st = GeneratorState.seeded(seed)
    order = list(GROUPS)
    for spec in in_group_order(groups):
        if per_group_streams:
            batch = generate_group(spec, cases, derive_group_seed(seed, order.index(spec.name)))
        else:
            batch, st = _generate_cases(spec, cases, st)
        instances.extend(batch)
        logger.debug(f"Generated {len(batch)} cases for {spec.name.value}")
    return instances


def write_instances(instances: Sequence[Instance], out_dir: str | Path) -> list[Path]:
    """Writes each instance as <name>.json, e.g. G1_case01.json."""
    out_dir = Path(out_dir)
    return [save_instance(inst, out_dir / f"{inst.name}.json") for inst in instances]
