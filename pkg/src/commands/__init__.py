"""Base classes for CLI subcommands"""
import argparse
import logging
import sys
from pathlib import Path
from typing import NamedTuple, Optional, TextIO

from utilities.config import EcaSeqPaths
from utilities.export import Rows, render, write_export
from utilities.schemas import validate_document


class CommandOutput(NamedTuple):
    """What a subcommand produced

    `text` replaces the generic table rendering for the text format.
    """
    document: dict
    rows: Optional[Rows] = None
    exit_code: int = 0
    text: Optional[str] = None


class BaseCommand:
    """Base class for all subcommands"""
    name: str = ""
    help: str = ""

    def __init__(self, paths: EcaSeqPaths | None = None):
        self.logger = logging.getLogger(f"EcaSeq.commands.{self.name}")
        self.paths = paths

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Register subcommand arguments. Should be implemented by subclasses."""

    def execute(self, args: argparse.Namespace) -> CommandOutput:
        """Compute the result document. Should be implemented by subclasses."""
        raise NotImplementedError

    def export_path(self, path: Path | str) -> Path:
        """Relative paths land in the exports directory"""
        target = Path(path)
        if not target.is_absolute() and self.paths is not None:
            target = self.paths.exports_path / target
        return target

    def run(self, args: argparse.Namespace, stdout: TextIO = sys.stdout) -> int:
        """Execute, validate against the published schema, print and optionally save"""
        output = self.execute(args)
        validate_document(self.name, output.document)
        if args.format == "text" and output.text is not None:
            text = output.text
        else:
            text = render(args.format, output.document, output.rows)
        print(text, file=stdout)

        if getattr(args, "output", None):
            result = write_export(text, self.export_path(args.output))
            self.logger.info(result.message)
        return output.exit_code


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json",
                        help="output format (default: json)")
    parser.add_argument("--output", metavar="PATH",
                        help="also write the output to PATH, relative paths go to the exports directory")


def add_workers_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for sharded searches (default: 1)")
    parser.add_argument("--no-progress", action="store_true",
                        help="never show a progress bar on stderr")


def show_progress(args: argparse.Namespace) -> bool:
    return not args.no_progress and sys.stderr.isatty()
