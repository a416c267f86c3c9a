"""orbit: trajectory of one configuration with its space-time diagram"""
import argparse

from automata.dynamics import DynamicalSystem, orbit
from commands import BaseCommand, CommandOutput, add_common_arguments
from utilities.constants import DEFAULT_GLYPHS
from utilities.diagram import build_diagram, render_text, write_pgm
from utilities.parsing import parse_configuration, parse_glyphs, parse_mode, parse_rule


class OrbitCommand(BaseCommand):
    name = "orbit"
    help = "simulate a configuration until its orbit repeats"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--rule", required=True, help="Wolfram code 0..255")
        parser.add_argument("--config", required=True, help="initial configuration, cell 0 first")
        parser.add_argument("--n", type=int, help="ring size (default: length of --config)")
        parser.add_argument("--mode", default="forward",
                            help="(i0,...,in-1), {a,b};{c} or forward/reverse/stride3/parallel")
        parser.add_argument("--trace", choices=("steps", "substeps"), default="steps",
                            help="one diagram row per step or per substep")
        parser.add_argument("--glyphs", default=DEFAULT_GLYPHS,
                            help="two characters drawing states 0 and 1 in text output")
        parser.add_argument("--pgm", metavar="PATH",
                            help="also dump the diagram as a plain PGM image, "
                                 "relative paths go to the exports directory")
        add_common_arguments(parser)

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        rule = parse_rule(args.rule)
        n = args.n if args.n is not None else len(args.config.strip())
        x = parse_configuration(args.config, n)
        mode = parse_mode(args.mode, n)
        glyphs = parse_glyphs(args.glyphs)

        system = DynamicalSystem(rule, n, mode)
        record = orbit(system, x, trace=args.trace == "substeps")
        diagram = build_diagram(record, args.trace)
        if args.pgm:
            path = write_pgm(diagram, self.export_path(args.pgm))
            self.logger.info("Wrote diagram to %s", path)

        document = {
            "rule": rule.code,
            "n": n,
            "mode": str(mode),
            "config": str(x),
            "trace": args.trace,
            "rows": diagram.words(),
            "step_rows": [row.is_step for row in diagram.rows],
            "record": record.to_dict(),
        }
        rows = [["row", "step", "substep", "configuration"]]
        rows += [[index, row.step, row.substep, str(row.config)]
                 for index, row in enumerate(diagram.rows)]
        text = (render_text(diagram, glyphs)
                + f"\ntransient {record.transient}, cycle {record.cycle}")
        return CommandOutput(document, rows, text=text)
