"""Command line interface: run scenario files and emit reports.

Exit codes: 0 = all checks passed, 1 = at least one check failed,
2 = the scenario failed to load or validate.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ScenarioError
from .scenario import emit, load, run


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidhopf",
        description="Exact checks of Hopf-theoretic identities on graded vector spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run the checks of a scenario file")
    runp.add_argument("scenario", help="path to a scenario JSON file")
    runp.add_argument("--check", action="append", dest="checks", metavar="NAME",
                      help="run only this check (repeatable)")
    runp.add_argument("--format", choices=("human", "machine"), default="human")
    runp.add_argument("--list-checks", action="store_true",
                      help="list the scenario's check names and exit")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sc = load(args.scenario)
        if args.list_checks:
            for spec in sorted(sc.checks, key=lambda c: c.name):
                expect = "" if spec.expect == "pass" else "  (expect fail)"
                print(f"{spec.name}  [{spec.kind}]{expect}")
            return 0
        report = run(sc, selection=args.checks)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit(report, args.format))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
