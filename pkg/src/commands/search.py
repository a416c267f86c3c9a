"""search: universality, mode counts, coverings and non-convergent configurations"""
import argparse

from commands import BaseCommand, CommandOutput, add_common_arguments, add_workers_argument, show_progress
from search.covering import (STRATEGIES, find_composed_mode, find_covering, non_convergent_configs,
                             periodic_cover, word_blocker_check)
from search.universality import COUNTINGS, is_universal, mode_count, universal_modes
from utilities.parsing import ParseError, parse_configuration, parse_mode, parse_rule

SEARCH_KINDS = ("universal", "count", "covering", "nonconv", "blocker", "composed")


class SearchCommand(BaseCommand):
    name = "search"
    help = "search sequential update modes of a rule on one ring size"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("kind", choices=SEARCH_KINDS, help="what to search for")
        parser.add_argument("--rule", required=True, help="Wolfram code 0..255")
        parser.add_argument("--n", type=int, required=True, help="ring size")
        parser.add_argument("--mode", default="forward", help="mode checked by 'universal'")
        parser.add_argument("--counting", choices=COUNTINGS, default="raw",
                            help="count raw permutations or signature classes")
        parser.add_argument("--list", action="store_true", help="list the modes counted by 'count'")
        parser.add_argument("--strategy", choices=STRATEGIES, default="greedy",
                            help="covering strategy")
        parser.add_argument("--word", help="blocking word checked by 'blocker'")
        parser.add_argument("--config", help="single configuration for 'composed'")
        parser.add_argument("--expect-universal", action="store_true",
                            help="exit with status 1 unless a universal mode is found")
        add_workers_argument(parser)
        add_common_arguments(parser)

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        rule = parse_rule(args.rule)
        handler = getattr(self, f"_{args.kind}")
        document, rows, positive = handler(rule, args)
        exit_code = 1 if args.expect_universal and not positive else 0
        return CommandOutput({"kind": args.kind, **document}, rows, exit_code)

    def _universal(self, rule, args):
        verdict = is_universal(rule, args.n, parse_mode(args.mode, args.n))
        document = verdict.to_dict()
        rows = [["mode", "universal", "witness", "converged"],
                [document["mode"], verdict.universal, document["witness"], document["converged"]]]
        return document, rows, verdict.universal

    def _count(self, rule, args):
        progress = show_progress(args)
        modes = None
        count = None
        if args.list:
            modes = universal_modes(rule, args.n, args.counting, args.workers, progress)
            count = len(modes)
        result = mode_count(rule, args.n, args.counting, args.workers, progress, count)
        document = result.to_dict()
        if modes is not None:
            document["modes"] = [str(mode) for mode in modes]
        rows = [["rule", "n", "counting", "count", "published", "discrepancy"],
                [rule.code, args.n, args.counting, result.count, result.published,
                 result.discrepancy]]
        return document, rows, document["count"] > 0

    def _covering(self, rule, args):
        result = find_covering(rule, args.n, args.strategy)
        document = result.to_dict()
        rows = [["mode", "configurations"]]
        for mode in result.modes or ():
            rows.append([str(mode), sum(1 for m in result.assignment.values() if m == mode)])
        if not result.found:
            rows = [["never converges"]] + [[word] for word in document["witnesses"]]
        return document, rows, result.found

    def _nonconv(self, rule, args):
        stuck = sorted(non_convergent_configs(rule, args.n))
        document = {"rule": rule.code, "n": args.n, "count": len(stuck),
                    "configurations": [str(x) for x in stuck]}
        rows = [["configuration"]] + [[str(x)] for x in stuck]
        return document, rows, not stuck

    def _blocker(self, rule, args):
        if not args.word:
            raise ParseError("search blocker needs --word")
        blocked = word_blocker_check(rule, args.n, args.word)
        document = {"rule": rule.code, "n": args.n, "word": args.word, "blocked": blocked}
        return document, [["word", "blocked"], [args.word, blocked]], not blocked

    def _composed(self, rule, args):
        if args.config:
            x = parse_configuration(args.config, args.n)
            mode = find_composed_mode(rule, args.n, x)
            assignment = {} if mode is None else {str(x): str(mode)}
            document = {"rule": rule.code, "n": args.n, "assignment": assignment,
                        "witnesses": [] if mode is not None else [str(x)]}
        else:
            document = periodic_cover(rule, args.n).to_dict()
        rows = [["configuration", "mode"]] + [[k, v] for k, v in document["assignment"].items()]
        rows += [[word, None] for word in document["witnesses"]]
        return document, rows, not document["witnesses"]
