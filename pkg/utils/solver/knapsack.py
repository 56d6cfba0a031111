from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence
import numpy as np


# --- Types ---


@dataclass(frozen=True)
class Column:
    """A template offered to the knapsack: its fabric length and how many
    copies the current height profile allows without overproducing."""
    length: int
    capacity: int
    figure_index: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"column length must be positive, got {self.length}")
        if self.capacity < 0:
            raise ValueError(f"column capacity must be non-negative, got {self.capacity}")


@dataclass(frozen=True)
class KnapsackSolution:
    taken: tuple[int, ...]
    used_length: int


# --- Solver ---


def solve_bounded_knapsack(cap: int, columns: Sequence[Column]) -> KnapsackSolution:
    """
    Chooses how many copies of each column to place along a bed of length cap
    so that the used length is as large as possible.

    Value equals weight, so this is a reachability problem over the lengths
    0..cap. Among optimal witnesses the one returned is fixed: columns are
    scanned in ascending figure_index and each takes the largest count that
    keeps the optimum reachable with the columns after it.

    Args:
        cap (int): Bed length, at least 1.
        columns (Sequence[Column]): Offered columns, in any order.

    Returns:
        KnapsackSolution: taken[k] is the count chosen for columns[k].
    """
    if cap < 1:
        raise ValueError(f"knapsack capacity must be positive, got {cap}")

    order = sorted(range(len(columns)), key=lambda k: columns[k].figure_index)
    items = tuple((columns[k].length, columns[k].capacity) for k in order)
    taken_sorted, used = _solve(cap, items)

    taken = [0] * len(columns)
    for position, k in enumerate(order):
        taken[k] = taken_sorted[position]
    return KnapsackSolution(taken=tuple(taken), used_length=used)


@lru_cache(maxsize=1 << 16)
def _solve(cap: int, items: tuple[tuple[int, int], ...]) -> tuple[tuple[int, ...], int]:
    n = len(items)
    # suffix[i, w]: length w can be filled exactly with items i..n-1
    suffix = np.zeros((n + 1, cap + 1), dtype=bool)
    suffix[n, 0] = True
    for i in range(n - 1, -1, -1):
        length, capacity = items[i]
        suffix[i] = _add_bounded(suffix[i + 1], length, min(capacity, cap // length))

    best = int(np.flatnonzero(suffix[0])[-1])

    taken: list[int] = []
    remaining = best
    for i, (length, capacity) in enumerate(items):
        q = min(capacity, remaining // length)
        while q > 0 and not suffix[i + 1, remaining - q * length]:
            q -= 1
        taken.append(q)
        remaining -= q * length
    return tuple(taken), best


def _add_bounded(reach: np.ndarray, length: int, count: int) -> np.ndarray:
    """Extends a reachability row by 0..count copies of one item (binary splitting)."""
    out = reach.copy()
    chunk = 1
    while count > 0:
        step = min(chunk, count)
        shift = step * length
        if shift < out.size:
            out[shift:] |= out[:-shift].copy()
        count -= step
        chunk <<= 1
    return out


@lru_cache(maxsize=1 << 18)
def max_fill(cap: int, items: tuple[tuple[int, int], ...]) -> int:
    """
    The used length solve_bounded_knapsack would report, without a witness.

    items holds (length, capacity) pairs. Reachable lengths are kept as the
    bits of one integer, which is much cheaper than the per-row arrays the
    witness search needs.
    """
    if cap < 1:
        raise ValueError(f"knapsack capacity must be positive, got {cap}")
    mask = (1 << (cap + 1)) - 1
    full = 1 << cap
    reach = 1
    for length, capacity in items:
        count = min(capacity, cap // length)
        chunk = 1
        while count > 0:
            step = min(chunk, count)
            reach |= (reach << (step * length)) & mask
            count -= step
            chunk <<= 1
        if reach & full:
            break
    return reach.bit_length() - 1
