import json
import logging

import pytest
from hypothesis import given, strategies as st

from automata.configuration import InputError
from automata.dynamics import DynamicalSystem, orbit
from automata.modes import SequentialMode, UpdateMode, reverse_sweep
from conftest import word
from utilities.config import EcaSeqPaths
from utilities.constants import APP_NAME
from utilities.diagram import build_diagram, render_text, write_pgm
from utilities.export import ExportError, render, write_export
from utilities.logging_setup import init_logging
from utilities.parsing import (ParseError, parse_configuration, parse_glyphs, parse_mode,
                               parse_n_values, parse_rule)


#region Parsing
@given(st.text(alphabet="01", min_size=3, max_size=16))
def test_configuration_text_round_trip(text):
    assert str(parse_configuration(text)) == text


def test_configuration_errors():
    with pytest.raises(ParseError):
        parse_configuration("01a0")
    with pytest.raises(ParseError):
        parse_configuration("")
    with pytest.raises(InputError):
        parse_configuration("0101", 5)


def test_parse_modes():
    assert parse_mode("(2, 0, 1)", 3) == SequentialMode((2, 0, 1))
    assert parse_mode("{0,2};{1}", 3) == UpdateMode.from_blocks(3, [{0, 2}, {1}])
    assert parse_mode("reverse", 4) == reverse_sweep(4)
    assert parse_mode("Parallel", 4).period == 1
    assert str(parse_mode("stride3", 6)) == "(0,3,1,4,2,5)"


@pytest.mark.parametrize("text, n, error", [
    ("(0,1", 3, ParseError),
    ("0,1,2", 3, ParseError),
    ("{0,0};{1,2}", 3, ParseError),
    ("(0,1)", 3, InputError),
    ("(0,1,1)", 3, InputError),
    ("{0};{3}", 3, InputError),
])
def test_mode_errors(text, n, error):
    with pytest.raises(error):
        parse_mode(text, n)


def test_parse_rule():
    assert parse_rule(" 110 ").code == 110
    with pytest.raises(ParseError):
        parse_rule("rule110")
    with pytest.raises(InputError):
        parse_rule("256")


@pytest.mark.parametrize("text, expected", [
    ("6", (6,)),
    ("4..8", (4, 5, 6, 7, 8)),
    ("10,6,8", (6, 8, 10)),
])
def test_parse_n_values(text, expected):
    assert parse_n_values(text) == expected


@pytest.mark.parametrize("text", ["8..4", "a..b", "6;8", ""])
def test_parse_n_values_errors(text):
    with pytest.raises(ParseError):
        parse_n_values(text)


def test_parse_glyphs():
    assert parse_glyphs("░█") == "░█"
    with pytest.raises(ParseError):
        parse_glyphs("00")
#endregion


#region Diagrams
def _orbit_of_rule_2(trace=False):
    return orbit(DynamicalSystem(2, 5, reverse_sweep(5)), word("10000"), trace=trace)


def test_step_diagram_closes_with_the_repeat():
    diagram = build_diagram(_orbit_of_rule_2())
    assert diagram.words() == ["10000", "00111", "00000", "00000"]
    assert all(row.is_step for row in diagram.rows)
    assert [row.step for row in diagram.rows] == [0, 1, 2, 3]


def test_substep_diagram_changes_one_cell_per_row():
    diagram = build_diagram(_orbit_of_rule_2(trace=True), "substeps")
    rows = diagram.rows
    assert len(rows) == 16
    for before, after in zip(rows, rows[1:]):
        assert bin(before.config.bits ^ after.config.bits).count("1") <= 1
    assert [row.substep for row in rows[1:5]] == [0, 1, 2, 3]


def test_substep_diagram_needs_a_trace():
    with pytest.raises(ValueError):
        build_diagram(_orbit_of_rule_2(), "substeps")


def test_render_text_marks_step_rows():
    text = render_text(build_diagram(_orbit_of_rule_2(trace=True), "substeps"), "01")
    lines = text.splitlines()
    assert lines[0] == "| 10000"
    assert lines[1] == "  10001"
    assert lines[5] == "| 00111"


def test_write_pgm(tmp_path):
    path = write_pgm(build_diagram(_orbit_of_rule_2()), tmp_path / "d.pgm")
    lines = path.read_text().splitlines()
    assert lines[:3] == ["P2", "5 4", "1"]
    assert lines[4] == "1 1 0 0 0"
    assert len(lines) == 7
#endregion


#region Export
DOCUMENT = {"rule": 90, "walls": ["0", "1"], "das_condition": None, "ok": True}


def test_json_output():
    assert json.loads(render("json", DOCUMENT)) == DOCUMENT


def test_csv_output_without_rows():
    lines = render("csv", DOCUMENT).splitlines()
    assert lines == ["field,value", "rule,90", "walls,0 1", "das_condition,", "ok,true"]


def test_csv_output_with_rows():
    assert render("csv", DOCUMENT, [["a", "b"], [1, None]]) == "a,b\n1,"


def test_text_output():
    text = render("text", DOCUMENT, [["id", "status"], ["LEM4", "pass"]])
    assert "LEM4" in text
    assert "status" in text


def test_unsupported_format():
    with pytest.raises(ExportError):
        render("xml", DOCUMENT)


def test_write_export(tmp_path):
    result = write_export("{}", tmp_path / "nested" / "out.json")
    assert result.path.read_text() == "{}\n"
    assert "out.json" in result.message


def test_write_export_failure(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(ExportError):
        write_export("{}", blocker / "out.json")
#endregion


#region Paths and logging
def test_paths_follow_the_home_override(app_home):
    paths = EcaSeqPaths()
    assert paths.base_path == app_home
    assert paths.logs_path.is_dir()
    assert paths.exports_path == app_home / "Exports"
    assert paths.exports_path.is_dir()


def test_paths_without_creation(tmp_path):
    paths = EcaSeqPaths(tmp_path / "base", create=False)
    assert not paths.logs_path.exists()


def test_path_setters_create_directories(tmp_path):
    paths = EcaSeqPaths(tmp_path)
    paths.exports_path = tmp_path / "tables"
    assert (tmp_path / "tables").is_dir()


def test_reset_to_defaults(app_home, tmp_path_factory):
    paths = EcaSeqPaths(tmp_path_factory.mktemp("elsewhere"))
    paths.reset_to_defaults()
    assert paths.base_path == app_home
    assert paths.logs_path == app_home / "Logs"


def test_init_logging_does_not_stack_handlers(tmp_path):
    init_logging(tmp_path)
    logger = init_logging(tmp_path, verbose=True)
    assert logger.name == APP_NAME
    assert len(logger.handlers) == 2
    assert list(tmp_path.glob("ecaseq_*.log"))
    console = [h for h in logger.handlers if not isinstance(h, logging.FileHandler)]
    assert console[0].level == logging.DEBUG


def test_init_logging_console_only():
    logger = init_logging(None)
    assert len(logger.handlers) == 1
    assert logger.handlers[0].level == logging.WARNING
#endregion
