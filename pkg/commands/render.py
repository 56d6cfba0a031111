import argparse
from pathlib import Path
from commands.arguments import positive_float
from utils.core.files import load_instance, load_plan
from utils.core.render import write_plan_svg


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("render", help="Draw a plan as an SVG lay diagram")
    parser.add_argument("plan", type=Path, metavar="PLAN")
    parser.add_argument("instance", type=Path, metavar="INSTANCE")
    parser.add_argument("--out", type=Path, required=True, metavar="FILE.svg")
    parser.add_argument("--scale", type=positive_float, default=1.0, help="Drawing units per length unit")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    plan = load_plan(args.plan)
    inst = load_instance(args.instance)
    print(write_plan_svg(plan, inst, args.out, scale=args.scale))
    return 0
