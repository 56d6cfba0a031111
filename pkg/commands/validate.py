import sys
import argparse
from pathlib import Path
from utils.core.files import load_instance, load_plan
from utils.core.metrics import validate_instance, validate_plan


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="Check a plan against an instance")
    parser.add_argument("instance", type=Path, metavar="INSTANCE")
    parser.add_argument("plan", type=Path, metavar="PLAN")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Exit 0 when the plan is exact and feasible; otherwise print each violation to stderr and exit 2."""
    inst = load_instance(args.instance)
    plan = load_plan(args.plan)

    report = validate_instance(inst)
    if report.valid:
        report = validate_plan(plan, inst)
    if report.valid:
        print("valid")
        return 0
    for violation in report.violations:
        print(violation, file=sys.stderr)
    return 2
