"""rule-info: static facts about one rule"""
import argparse

from automata.rules import activity_map, das_condition, find_walls, pattern_text, symmetry_class
from commands import BaseCommand, CommandOutput, add_common_arguments
from search.classification import published_entry
from search.fixed_points import fixed_point_existence
from utilities.constants import NEIGHBORHOODS_DESC
from utilities.parsing import parse_rule

# Walls are listed up to this length
RULE_INFO_WALL_LENGTH = 3


class RuleInfoCommand(BaseCommand):
    name = "rule-info"
    help = "truth table, symmetry class, convergence condition and walls of a rule"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--rule", required=True, help="Wolfram code 0..255")
        parser.add_argument("--n", type=int, help="also list the fixed points on n cells")
        add_common_arguments(parser)

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        rule = parse_rule(args.rule)
        klass = symmetry_class(rule.code)
        published = published_entry(rule.code)
        activity = activity_map(rule)
        fixed = None
        if args.n is not None:
            fixed = [str(x) for x in sorted(fixed_point_existence(rule, args.n).fixed_points)]

        document = {
            "rule": rule.code,
            "table": {pattern_text(p): rule.output(p) for p in NEIGHBORHOODS_DESC},
            "activity": activity,
            "symmetry_class": sorted(klass.members),
            "representative": klass.representative,
            "das_condition": das_condition(rule),
            "walls": {str(k): sorted(find_walls(rule, k))
                      for k in range(1, RULE_INFO_WALL_LENGTH + 1)},
            "wolfram_class": published[1] if published else None,
            "published_category": published[0] if published else None,
            "n": args.n,
            "fixed_points": fixed,
        }
        rows = [["neighborhood", "output", "activity"]]
        rows += [[pattern, bit, activity[pattern]] for pattern, bit in document["table"].items()]
        return CommandOutput(document, rows)
