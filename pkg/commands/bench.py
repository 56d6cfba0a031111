import argparse
from pathlib import Path
from commands.arguments import add_time_limit_argument, positive_int, time_limit
from utils.core.config import DEFAULT_JOBS, DEFAULT_SEED
from utils.solver.hfsc import SolveConfig
from utils.bench.generator import parse_groups
from utils.bench.harness import (
    reference_deviations,
    run_benchmark,
    summarize,
    write_report,
)

REPORT_NAME = "results.csv"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bench", help="Generate, solve and report benchmark groups")
    parser.add_argument("--groups", default="all", help="Comma-separated groups (G1,G2,...) or all")
    parser.add_argument("--cases", type=positive_int, default=50, help="Cases per group")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_time_limit_argument(parser)
    parser.add_argument("--out", type=Path, required=True, metavar="DIR")
    parser.add_argument("--jobs", type=positive_int, default=DEFAULT_JOBS, help="Worker processes")
    parser.add_argument(
        "--pooled-ur",
        action="store_true",
        help="Average UR over all lays of a group instead of over case means",
    )
    parser.add_argument(
        "--no-timings",
        action="store_true",
        help="Leave the tc columns empty so reruns give byte-identical files",
    )
    parser.add_argument("--per-group-streams", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    groups = parse_groups(args.groups)
    cfg = SolveConfig(time_limit=time_limit(args.time_limit))
    results = run_benchmark(
        groups,
        args.cases,
        args.seed,
        cfg,
        jobs=args.jobs,
        per_group_streams=args.per_group_streams,
    )
    summaries = summarize(results, groups=[spec.name for spec in groups], pooled=args.pooled_ur)
    write_report(summaries, results, args.out / REPORT_NAME, timings=not args.no_timings)

    for deviation in reference_deviations(summaries):
        print(
            f"{deviation.group.value} mean_k={deviation.mean_k:.2f} "
            f"(reference {deviation.reference_k:g}, {deviation.k_deviation_pct:+.2f}%) "
            f"mean_ur={deviation.mean_ur_pct:.2f} "
            f"(reference {deviation.reference_ur_pct:g}, {deviation.ur_deviation_points:+.2f} pts) "
            f"{'ok' if deviation.within_tolerance else 'off'}"
        )
    return 0
