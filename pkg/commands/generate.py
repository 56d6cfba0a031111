import argparse
import logging
from pathlib import Path
from commands.arguments import positive_int
from utils.core.config import DEFAULT_SEED
from utils.bench.generator import generate_suite, parse_groups, write_instances

logger = logging.getLogger("hfsc")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("generate", help="Write benchmark instance files")
    parser.add_argument("--group", default="all", help="G1..G10, a comma-separated list, or all")
    parser.add_argument("--cases", type=positive_int, default=50, help="Cases per group")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--out", type=Path, required=True, metavar="DIR")
    parser.add_argument(
        "--per-group-streams",
        action="store_true",
        help="Seed each group separately instead of one stream through all groups",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    groups = parse_groups(args.group)
    instances = generate_suite(groups, args.cases, args.seed, per_group_streams=args.per_group_streams)
    paths = write_instances(instances, args.out)
    logger.info(f"Wrote {len(paths)} instance files to {args.out}")
    for path in paths:
        print(path)
    return 0
