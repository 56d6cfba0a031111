import itertools
import pytest
import numpy as np
from utils.solver.knapsack import Column, KnapsackSolution, max_fill, solve_bounded_knapsack


def brute_force_best(cap: int, columns: list[Column]) -> int:
    ranges = [range(min(c.capacity, cap // c.length) + 1) for c in columns]
    best = 0
    for counts in itertools.product(*ranges):
        used = sum(q * c.length for q, c in zip(counts, columns))
        if used <= cap:
            best = max(best, used)
    return best


def test_two_columns_fill_the_bed():
    columns = [Column(length=3, capacity=2, figure_index=0), Column(length=4, capacity=1, figure_index=1)]
    assert solve_bounded_knapsack(10, columns) == KnapsackSolution(taken=(2, 1), used_length=10)


def test_no_columns():
    assert solve_bounded_knapsack(720, []) == KnapsackSolution(taken=(), used_length=0)


def test_single_column_limited_by_bed():
    columns = [Column(length=60, capacity=20, figure_index=0)]
    assert solve_bounded_knapsack(720, columns) == KnapsackSolution(taken=(12,), used_length=720)


def test_zero_capacities():
    columns = [Column(length=5, capacity=0, figure_index=i) for i in range(3)]
    assert solve_bounded_knapsack(100, columns) == KnapsackSolution(taken=(0, 0, 0), used_length=0)


def test_column_rejects_bad_values():
    with pytest.raises(ValueError):
        Column(length=0, capacity=1, figure_index=0)
    with pytest.raises(ValueError):
        Column(length=1, capacity=-1, figure_index=0)


def test_capacity_must_be_positive():
    with pytest.raises(ValueError):
        solve_bounded_knapsack(0, [Column(length=1, capacity=1, figure_index=0)])


def test_witness_ignores_input_order():
    columns = [
        Column(length=4, capacity=1, figure_index=1),
        Column(length=3, capacity=2, figure_index=0),
    ]
    assert solve_bounded_knapsack(10, columns) == KnapsackSolution(taken=(1, 2), used_length=10)


def test_lower_figure_index_takes_the_most():
    # 6 can be made as 2×3 or 3×2; figure 0 is scanned first and takes as many as it can
    columns = [Column(length=3, capacity=2, figure_index=0), Column(length=2, capacity=3, figure_index=1)]
    assert solve_bounded_knapsack(6, columns) == KnapsackSolution(taken=(2, 0), used_length=6)


def test_matches_brute_force_on_random_cases(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        columns = [
            Column(
                length=int(rng.integers(1, 51)),
                capacity=int(rng.integers(0, 6)),
                figure_index=i,
            )
            for i in range(n)
        ]
        cap = int(rng.integers(1, 51))
        solution = solve_bounded_knapsack(cap, columns)

        assert solution.used_length == brute_force_best(cap, columns)
        assert max_fill(cap, tuple((c.length, c.capacity) for c in columns)) == solution.used_length
        assert solution.used_length <= cap
        assert all(0 <= q <= c.capacity for q, c in zip(solution.taken, columns))
        assert solution.used_length == sum(q * c.length for q, c in zip(solution.taken, columns))


def test_more_capacity_never_hurts(rng):
    for _ in range(200):
        n = int(rng.integers(1, 4))
        lengths = rng.integers(1, 12, size=n)
        capacities = rng.integers(0, 4, size=n)
        bumped = capacities + rng.integers(0, 3, size=n)
        cap = int(rng.integers(1, 40))

        base = solve_bounded_knapsack(cap, [
            Column(int(l), int(q), i) for i, (l, q) in enumerate(zip(lengths, capacities))
        ])
        more = solve_bounded_knapsack(cap, [
            Column(int(l), int(q), i) for i, (l, q) in enumerate(zip(lengths, bumped))
        ])
        assert more.used_length >= base.used_length


def test_same_input_same_witness():
    columns = [Column(length=l, capacity=3, figure_index=i) for i, l in enumerate((7, 5, 3))]
    first = solve_bounded_knapsack(29, columns)
    second = solve_bounded_knapsack(29, list(columns))
    assert first == second
    assert np.sum(np.array(first.taken) * np.array([7, 5, 3])) == first.used_length


# --- max_fill ---


def test_max_fill_examples():
    assert max_fill(10, ((3, 2), (4, 1))) == 10
    assert max_fill(720, ((60, 20),)) == 720
    assert max_fill(100, ((5, 0), (5, 0))) == 0
    assert max_fill(720, ()) == 0
    assert max_fill(9, ((4, 5),)) == 8


def test_max_fill_needs_positive_capacity():
    with pytest.raises(ValueError):
        max_fill(0, ((1, 1),))
