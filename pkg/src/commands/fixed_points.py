"""fixed-points: fixed points of a rule and, optionally, which are isolated"""
import argparse

from commands import BaseCommand, CommandOutput, add_common_arguments
from search.fixed_points import fixed_point_existence, isolated_fixed_points
from utilities.parsing import parse_rule


class FixedPointsCommand(BaseCommand):
    name = "fixed-points"
    help = "fixed points shared by every sequential mode"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--rule", required=True, help="Wolfram code 0..255")
        parser.add_argument("--n", type=int, required=True, help="ring size")
        parser.add_argument("--isolated", action="store_true",
                            help="also sweep every representative mode for isolated fixed points")
        add_common_arguments(parser)

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        rule = parse_rule(args.rule)
        if args.isolated:
            report = isolated_fixed_points(rule, args.n)
            fixed = report.fixed_points
            isolated = [str(x) for x in sorted(report.isolated)]
            degenerate = report.degenerate
        else:
            fixed = fixed_point_existence(rule, args.n).fixed_points
            isolated, degenerate = None, None

        document = {
            "rule": rule.code,
            "n": args.n,
            "exists": bool(fixed),
            "fixed_points": [str(x) for x in sorted(fixed)],
            "isolated": isolated,
            "degenerate": degenerate,
        }
        marked = set(isolated or ())
        rows = [["configuration", "isolated"]]
        rows += [[word, word in marked if isolated is not None else None]
                 for word in document["fixed_points"]]
        return CommandOutput(document, rows)
