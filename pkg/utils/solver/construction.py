"""
Greedy lay construction.

A lay is built by trying height profiles (layers per fabric type) whose sum
equals a working height, turning each profile into knapsack columns, and
keeping the fullest lay. Lays are created one after another against the
remaining demand, with volume and height targets that track the average of
the lays created so far.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence
import numpy as np
from utils.core.models import Lay
from utils.solver.knapsack import Column, max_fill, solve_bounded_knapsack
from exceptions.exceptions import ConstructionStallError

logger = logging.getLogger("hfsc")


# --- Types ---


@dataclass(frozen=True)
class HeightCandidates:
    """Admissible layer counts per fabric type; 0 is always admissible."""
    per_fabric: tuple[frozenset[int], ...]

    def descending(self, j: int) -> list[int]:
        return sorted(self.per_fabric[j], reverse=True)


@dataclass(frozen=True)
class ConstructionTargets:
    ref_v: Fraction
    ref_h: int

    def __post_init__(self):
        if self.ref_h < 1:
            raise ValueError(f"ref_h must be at least 1, got {self.ref_h}")
        if self.ref_v <= 0:
            raise ValueError(f"ref_v must be positive, got {self.ref_v}")

    @classmethod
    def full_bed(cls, bed_length: int, bed_height: int) -> "ConstructionTargets":
        return cls(ref_v=Fraction(bed_length * bed_height), ref_h=bed_height)


# --- Candidates and columns ---


def create_possible_heights(
    demand: np.ndarray,
    lengths: np.ndarray,
    bed_length: int,
    ref_h: int,
) -> HeightCandidates:
    """
    Lists the layer counts worth trying for each fabric type.

    ref_h is admissible for fabric j when some SKU of j still needs at least
    ref_h pieces. A smaller count ph is admissible when it divides some
    nonzero remaining requirement s_ij exactly and the s_ij/ph templates that
    would finish that SKU fit on the bed.

    Args:
        demand (np.ndarray): Remaining g×f demand.
        lengths (np.ndarray): Template length per garment figure.
        bed_length (int): Bed length l_ub.
        ref_h (int): Target lay height, at least 1.
    """
    if ref_h < 1:
        raise ValueError(f"ref_h must be at least 1, got {ref_h}")
    demand = np.asarray(demand, dtype=np.int64)
    lengths = np.asarray(lengths, dtype=np.int64)

    phs = np.arange(1, ref_h, dtype=np.int64)[:, None]
    per_fabric: list[frozenset[int]] = []
    for j in range(demand.shape[1]):
        column = demand[:, j]
        members = {0}
        if (column >= ref_h).any():
            members.add(ref_h)
        nonzero = column != 0
        s = column[nonzero][None, :]
        l = lengths[nonzero][None, :]
        if s.size and phs.size:
            fits = (s % phs == 0) & ((s // phs) * l <= bed_length)
            members.update(int(ph) for ph in phs[fits.any(axis=1), 0])
        per_fabric.append(frozenset(members))
    return HeightCandidates(per_fabric=tuple(per_fabric))


@dataclass(frozen=True, eq=False)
class CapacityTable:
    """
    Per-figure template capacities for every layer count up to max_h.

    rows[j, h, i] is how many templates of figure i a layer count h on fabric
    j allows, already limited to what fits on the bed; h = 0 places no limit.
    A profile's capacities are the minimum of its rows over the fabrics.
    """
    rows: np.ndarray
    lengths: np.ndarray
    bed_length: int

    @classmethod
    def build(cls, demand: np.ndarray, lengths: np.ndarray, bed_length: int, max_h: int) -> "CapacityTable":
        demand = np.asarray(demand, dtype=np.int64)
        lengths = np.asarray(lengths, dtype=np.int64)
        fill = bed_length // lengths
        counts = np.arange(1, max_h + 1, dtype=np.int64)[:, None]
        rows = np.empty((demand.shape[1], max_h + 1, demand.shape[0]), dtype=np.int64)
        for j in range(demand.shape[1]):
            rows[j, 0] = fill
            rows[j, 1:] = np.minimum(demand[:, j][None, :] // counts, fill)
        return cls(rows=rows, lengths=lengths, bed_length=bed_length)

    def start(self) -> np.ndarray:
        return self.rows[0, :1, :]

    def offered(self, capacities: np.ndarray) -> np.ndarray:
        """Upper bound on the knapsack fill: the bed length or every allowed template, whichever is less."""
        return np.minimum(capacities @ self.lengths, self.bed_length)


def create_columns(
    demand: np.ndarray,
    lengths: np.ndarray,
    profile: Sequence[int],
) -> list[Column]:
    """
    One column per garment figure. Its capacity is the number of templates
    the profile allows before some fabric of that figure would be overcut:
    min over fabrics with h_j > 0 of floor(s_ij / h_j).
    """
    heights = np.asarray(profile, dtype=np.int64)
    active = heights > 0
    if not active.any():
        raise ValueError("height profile has no positive entry")
    demand = np.asarray(demand, dtype=np.int64)
    capacities = (demand[:, active] // heights[active]).min(axis=1)
    return [
        Column(length=int(length), capacity=int(qc), figure_index=i)
        for i, (length, qc) in enumerate(zip(lengths, capacities))
    ]


def height_profile_matrix(
    cands: HeightCandidates,
    target_h: int,
    table: Optional[CapacityTable] = None,
    threshold: int = -1,
) -> tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Builds every profile with h_j in CH_j and Σ h_j == target_h as the rows
    of one array, in the order enumerate_height_profiles yields them.

    With a capacity table, the capacities of each row are returned as well,
    and rows whose fill bound times target_h is at most threshold are left
    out. Adding a fabric can only lower capacities, so partial profiles are
    dropped as soon as their bound falls to the threshold.

    Returns:
        tuple: (profiles, capacities), shaped (P, f) and (P, g); capacities
            is None without a table.
    """
    f = len(cands.per_fabric)
    options = [np.array(cands.descending(j), dtype=np.int64) for j in range(f)]
    if target_h < 1:
        empty = np.zeros((0, f), dtype=np.int64)
        return empty, None if table is None else np.zeros((0, table.lengths.size), dtype=np.int64)

    # most the fabrics from j onwards can still contribute
    reach = [0] * (f + 1)
    for j in range(f - 1, -1, -1):
        reach[j] = reach[j + 1] + (int(options[j][0]) if options[j].size else 0)

    profiles = np.zeros((1, 0), dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    capacities = None if table is None else table.start()
    for j in range(f):
        after = sums[:, None] + options[j][None, :]
        # row-major nonzero keeps prefixes in order and each prefix's options descending
        parent, choice = np.nonzero((after <= target_h) & (target_h - after <= reach[j + 1]))
        heights = options[j][choice]
        profiles = np.column_stack([profiles[parent], heights])
        sums = sums[parent] + heights
        if table is not None:
            capacities = np.minimum(capacities[parent], table.rows[j, heights])
            keep = table.offered(capacities) * target_h > threshold
            profiles, sums, capacities = profiles[keep], sums[keep], capacities[keep]

    complete = sums == target_h
    return profiles[complete], None if capacities is None else capacities[complete]


def enumerate_height_profiles(cands: HeightCandidates, target_h: int) -> Iterator[tuple[int, ...]]:
    """
    Yields every profile with h_j in CH_j and Σ h_j == target_h, once each.

    Order: lexicographic over fabric index with each fabric's candidates
    taken in descending order, so taller single-fabric layers come first.
    """
    profiles, _ = height_profile_matrix(cands, target_h)
    for row in profiles.tolist():
        yield tuple(row)


# --- Lay construction ---


def create_lay(
    demand: np.ndarray,
    lengths: np.ndarray,
    targets: ConstructionTargets,
    bed_length: int,
) -> Optional[Lay]:
    """
    Searches height profiles from targets.ref_h downwards for the lay with
    the largest volume.

    Candidates are computed once at the entry ref_h. At each working height
    the profiles are visited in enumeration order and solved as a knapsack
    over the bed length; only strictly larger volumes replace the best lay.
    Profiles whose fill bound cannot beat the best volume are never solved,
    and neither is a capacity vector already seen at this height, since it
    would give the same volume. The search stops as soon as the best volume
    reaches ref_v, when no profile at the working height could beat it, or
    when the working height reaches 0.

    Returns:
        Optional[Lay]: The best lay, or None when no profile gives a
        positive volume.
    """
    demand = np.asarray(demand, dtype=np.int64)
    lengths = np.asarray(lengths, dtype=np.int64)
    if not demand.any():
        raise ValueError("create_lay needs a nonzero remaining demand")

    cands = create_possible_heights(demand, lengths, bed_length, targets.ref_h)
    table = CapacityTable.build(demand, lengths, bed_length, targets.ref_h)
    figure_lengths = lengths.tolist()

    best_lay: Optional[Lay] = None
    best_volume = 0
    working_h = targets.ref_h
    while best_volume < targets.ref_v and working_h * bed_length > best_volume and working_h > 0:
        profiles, capacities = height_profile_matrix(cands, working_h, table, best_volume)
        assert capacities is not None
        bounds = table.offered(capacities) * working_h
        seen: set[bytes] = set()
        for row in np.flatnonzero(bounds > best_volume):
            if bounds[row] <= best_volume:
                continue
            key = capacities[row].tobytes()
            if key in seen:
                continue
            seen.add(key)
            items = tuple(zip(figure_lengths, capacities[row].tolist()))
            volume = max_fill(bed_length, items) * working_h
            if volume > best_volume:
                profile = tuple(profiles[row].tolist())
                solution = solve_bounded_knapsack(bed_length, create_columns(demand, lengths, profile))
                best_lay = Lay(heights=profile, counts=solution.taken)
                best_volume = volume
                if best_volume >= targets.ref_v:
                    break
        working_h -= 1
    return best_lay


def create_lays(
    demand: np.ndarray,
    lengths: np.ndarray,
    bed_length: int,
    bed_height: int,
) -> list[Lay]:
    """
    Creates lays one at a time until the demand is cut exactly.

    The first lay aims at a full bed. After each lay the volume target becomes
    the mean volume of the lays so far and the height target their mean
    height, rounded half up and kept within [1, bed_height]. If no lay can be
    found at the adaptive targets, the search is retried once at full-bed
    targets before giving up.

    Raises:
        ConstructionStallError: If even the full-bed retry finds no lay.
    """
    remaining = np.array(demand, dtype=np.int64)
    lengths = np.asarray(lengths, dtype=np.int64)
    full = ConstructionTargets.full_bed(bed_length, bed_height)
    targets = full

    lays: list[Lay] = []
    total_volume = 0
    total_height = 0
    while remaining.any():
        lay = create_lay(remaining, lengths, targets, bed_length)
        if lay is None and targets != full:
            logger.warning(
                f"No lay at targets ref_v={float(targets.ref_v):.1f} ref_h={targets.ref_h}; "
                "retrying at full-bed targets"
            )
            lay = create_lay(remaining, lengths, full, bed_length)
        if lay is None:
            stuck = [(int(i), int(j), int(remaining[i, j])) for i, j in zip(*np.nonzero(remaining))]
            raise ConstructionStallError(stuck)

        remaining -= lay.production()
        lays.append(lay)
        total_volume += lay.volume(lengths.tolist())
        total_height += lay.height

        mean_height = Fraction(total_height, len(lays))
        targets = ConstructionTargets(
            ref_v=Fraction(total_volume, len(lays)),
            ref_h=min(max(round_half_up(mean_height), 1), bed_height),
        )
    return lays


def round_half_up(value: Fraction) -> int:
    return (2 * value.numerator + value.denominator) // (2 * value.denominator)
