"""Rendering of command results as JSON, CSV or text tables"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Callable, Literal, NamedTuple, Optional, Sequence

from texttable import Texttable

OutputFormat = Literal["json", "csv", "text"]
Rows = Sequence[Sequence[Any]]


class ExportError(Exception):
    """Exception raised when a result cannot be rendered or written"""


class ExportResult(NamedTuple):
    """Result of writing an export file"""
    message: str
    path: Path | None = None


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def document_rows(document: dict) -> list[list[str]]:
    """Key/value rows for documents without a natural table layout"""
    return [["field", "value"]] + [[key, _cell(value)] for key, value in document.items()]


def to_json(document: dict, rows: Optional[Rows] = None) -> str:
    return json.dumps(document, indent=2)


def to_csv(document: dict, rows: Optional[Rows] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows if rows is not None else document_rows(document):
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue().rstrip("\n")


def to_text(document: dict, rows: Optional[Rows] = None) -> str:
    rows = rows if rows is not None else document_rows(document)
    table = Texttable(max_width=0)
    table.set_deco(Texttable.HEADER | Texttable.VLINES)
    table.set_cols_dtype(["t"] * len(rows[0]))
    table.add_rows([[_cell(value) for value in row] for row in rows])
    return table.draw()


formatters: dict[str, Callable[[dict, Optional[Rows]], str]] = {
    "json": to_json,
    "csv": to_csv,
    "text": to_text,
}


def render(output_format: OutputFormat, document: dict, rows: Optional[Rows] = None) -> str:
    """Render a result document; rows, header first, give the CSV and text layout"""
    formatter = formatters.get(output_format)
    if formatter is None:
        raise ExportError(f"unsupported output format: {output_format}")
    return formatter(document, rows)


def write_export(text: str, path: Path) -> ExportResult:
    """Write rendered output to path"""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise ExportError(f"Failed to write {path}: {e}") from e
    return ExportResult(message=f"Wrote {path}", path=path)
