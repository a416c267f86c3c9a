"""classify: reproduce the classification tables over the symmetry representatives"""
import argparse

from commands import BaseCommand, CommandOutput, add_common_arguments, add_workers_argument, show_progress
from search.classification import classify_rules, table_rows
from utilities.constants import CATEGORY_ORDER, DEFAULT_CLASSIFY_RANGE, WOLFRAM_CLASSES
from utilities.parsing import parse_n_values, parse_rule


class ClassifyCommand(BaseCommand):
    name = "classify"
    help = "classify rules by convergence under sequential update modes"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        low, high = DEFAULT_CLASSIFY_RANGE[0], DEFAULT_CLASSIFY_RANGE[-1]
        parser.add_argument("--n", default=f"{low}..{high}",
                            help=f"ring sizes, e.g. 6, 4..8 or 6,8,10 (default: {low}..{high})")
        parser.add_argument("--rules", nargs="+",
                            help="rule codes to classify (default: the 88 symmetry representatives)")
        add_workers_argument(parser)
        add_common_arguments(parser)

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        n_values = parse_n_values(args.n)
        rules = None if args.rules is None else [parse_rule(code).code for code in args.rules]
        reports = classify_rules(rules, n_values, args.workers, show_progress(args))
        table = table_rows(reports)

        for report in reports:
            if report.discrepancy:
                self.logger.warning("Rule %d: measured %s, published %s",
                                    report.rule, report.category, report.expected)
        document = {
            "n_values": list(n_values),
            "rules": [report.to_dict() for report in reports],
            "table": table,
            "totals": {category: sum(len(rules) for rules in columns.values())
                       for category, columns in table.items()},
            "discrepancies": [report.rule for report in reports if report.discrepancy],
        }
        conjectured = {report.rule for report in reports if report.conjectured}
        tags = {report.rule: report.restriction for report in reports if report.restriction}
        return CommandOutput(document, self._table(table, conjectured, tags))

    @staticmethod
    def _table(table, conjectured, tags):
        """Category rows against Wolfram class columns; conjectured rules in parentheses"""
        def label(rule):
            text = f"{rule}{tags[rule]}" if rule in tags else str(rule)
            return f"({text})" if rule in conjectured else text

        columns = list(WOLFRAM_CLASSES)
        if any("?" in classes for classes in table.values()):
            columns.append("?")
        rows = [["category", *columns, "total"]]
        for category in CATEGORY_ORDER:
            if category not in table:
                continue
            classes = table[category]
            cells = [" ".join(label(rule) for rule in classes.get(column, [])) for column in columns]
            rows.append([category, *cells, sum(len(rules) for rules in classes.values())])
        return rows
