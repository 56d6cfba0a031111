import argparse
import logging
from pathlib import Path
from commands.arguments import add_time_limit_argument, time_limit
from utils.core.files import load_instance, save_plan
from utils.core.metrics import plan_waste_volume, volume_lower_bound
from utils.solver.hfsc import SolveConfig, solve
from utils.bench.harness import percent, two_places

logger = logging.getLogger("hfsc")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("solve", help="Solve one instance file")
    parser.add_argument("instance", type=Path, metavar="INSTANCE")
    add_time_limit_argument(parser)
    parser.add_argument("--out", type=Path, metavar="PLAN", help="Where to write the plan JSON")
    parser.add_argument("--trace", action="store_true", help="Log every accepted improvement")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    cfg = SolveConfig(time_limit=time_limit(args.time_limit), record_trace=args.trace)
    result = solve(inst, cfg)
    plan = result.plan

    if args.out:
        save_plan(plan, args.out)
    for event in result.trace:
        logger.info(
            f"improvement at {event.elapsed:.2f}s: {event.best_count} kept + {event.lay_count} current"
        )
    logger.debug(
        f"initial_k={result.initial_k} lower_bound={volume_lower_bound(inst)} "
        f"waste_volume={plan_waste_volume(plan, inst)} timed_out={result.timed_out}"
    )
    print(f"k={plan.k} mean_ur={percent(plan.mean_ur)} tc={two_places(result.elapsed)}")
    return 0
