"""Main application class for the EcaSeq command line."""
import argparse
import logging
import sys
from typing import Sequence, TextIO

from automata.configuration import InputError
from commands import BaseCommand
from commands.classify import ClassifyCommand
from commands.fixed_points import FixedPointsCommand
from commands.orbit import OrbitCommand
from commands.rule_info import RuleInfoCommand
from commands.search import SearchCommand
from commands.verify import VerifyCommand
from utilities.config import EcaSeqPaths
from utilities.constants import APP_NAME, APP_VERSION
from utilities.export import ExportError
from utilities.logging_setup import init_logging
from utilities.parsing import ParseError

EXIT_USAGE = 2


class EcaSeqApp:
    """Main application class for EcaSeq."""
    def __init__(self, arguments: Sequence[str], stdout: TextIO = sys.stdout):
        self.arguments = list(arguments)
        self.stdout = stdout
        self.commands: dict[str, BaseCommand] = {}
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="ecaseq",
            description="Elementary cellular automata under sequential update modes",
        )
        parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
        parser.add_argument("-v", "--verbose", action="store_true", help="debug output on stderr")
        parser.add_argument("--no-log-file", action="store_true", help="do not write a log file")
        subparsers = parser.add_subparsers(dest="command", required=True)
        for command_class in (RuleInfoCommand, OrbitCommand, FixedPointsCommand, SearchCommand,
                              ClassifyCommand, VerifyCommand):
            command = command_class()
            sub = subparsers.add_parser(command.name, help=command.help)
            command.add_arguments(sub)
            self.commands[command.name] = command
        return parser

    def execute(self) -> int:
        """Parse the arguments, run the chosen subcommand and return its exit status"""
        args = self.parser.parse_args(self.arguments[1:])
        logger = logging.getLogger(APP_NAME)
        try:
            paths = EcaSeqPaths(create=not args.no_log_file)
            logger = init_logging(None if args.no_log_file else paths.logs_path, args.verbose)
            command = self.commands[args.command]
            command.paths = paths
            logger.debug("Running %s with %s", args.command, vars(args))
            return command.run(args, self.stdout)
        except (ParseError, InputError, ExportError, OSError) as e:
            logger.debug("Command failed", exc_info=True)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except Exception as e:
            logger.exception("Unexpected error running %s", args.command)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

    def run(self):
        """Run the command and exit with its status."""
        sys.exit(self.execute())
