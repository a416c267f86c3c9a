"""Parsing of the text forms used on the command line

Configurations are 0/1 words with cell 0 first, sequential modes are written
"(i0,i1,...)", periodic modes as ";"-separated blocks "{a,b};{c}". A few named
mode families are accepted as well.
"""
import re
from typing import Literal

from automata.configuration import Configuration, InputError
from automata.modes import (Mode, SequentialMode, UpdateMode, forward_sweep, parallel_mode,
                            reverse_sweep, stride_sweep)
from automata.rules import RuleTable

ModeFamily = Literal["forward", "reverse", "stride3", "parallel"]

MODE_FAMILIES = {
    "forward": forward_sweep,
    "reverse": reverse_sweep,
    "stride3": stride_sweep,
    "parallel": parallel_mode,
}

_SEQUENTIAL = re.compile(r"^\(\s*\d+(\s*,\s*\d+)*\s*\)$")
_BLOCK = re.compile(r"^\{\s*\d+(\s*,\s*\d+)*\s*\}$")
_RANGE = re.compile(r"^(\d+)\s*\.\.\s*(\d+)$")


class ParseError(Exception):
    """Exception raised when command-line text cannot be parsed"""


def parse_configuration(text: str, n: int | None = None) -> Configuration:
    """Parse a 0/1 word; when n is given the word must have n cells"""
    word = text.strip()
    if not word or any(ch not in "01" for ch in word):
        raise ParseError(f"configuration must be a string of 0s and 1s, got {text!r}")
    if n is not None and len(word) != n:
        raise InputError(f"configuration {word} has {len(word)} cells, expected n = {n}")
    return Configuration.from_cells(int(ch) for ch in word)


def _indices(body: str) -> list[int]:
    return [int(part) for part in body.split(",")]


def parse_mode(text: str, n: int) -> Mode:
    """Parse a sequential mode, a periodic block sequence or a family name"""
    source = text.strip()
    family = MODE_FAMILIES.get(source.lower())
    if family is not None:
        return family(n)

    if _SEQUENTIAL.match(source):
        order = _indices(source[1:-1])
        if len(order) != n:
            raise InputError(f"mode {source} lists {len(order)} cells, expected n = {n}")
        return SequentialMode(tuple(order))

    parts = [part.strip() for part in source.split(";")]
    if not all(_BLOCK.match(part) for part in parts):
        raise ParseError(f"malformed mode {text!r}: expected (i0,...,i{n - 1}), "
                         f"{{a,b,...}};{{c,...}} or one of {', '.join(MODE_FAMILIES)}")
    blocks = []
    for part in parts:
        cells = _indices(part[1:-1])
        if len(set(cells)) != len(cells):
            raise ParseError(f"block {part} repeats a cell")
        blocks.append(frozenset(cells))
    return UpdateMode(n, tuple(blocks))


def parse_rule(text: str | int) -> RuleTable:
    """Parse a Wolfram code"""
    try:
        code = int(str(text).strip())
    except ValueError as e:
        raise ParseError(f"rule must be an integer code, got {text!r}") from e
    return RuleTable.from_code(code)


def parse_n_values(text: str) -> tuple[int, ...]:
    """Ring sizes written as "6", "4..8" or "6,8,10" """
    source = text.strip()
    match = _RANGE.match(source)
    try:
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise ParseError(f"empty range {source}")
            return tuple(range(low, high + 1))
        return tuple(sorted({int(part) for part in source.split(",")}))
    except ValueError as e:
        raise ParseError(f"ring sizes must look like 6, 4..8 or 6,8,10, got {text!r}") from e


def parse_glyphs(text: str) -> str:
    """Two characters drawing the 0 and 1 states"""
    if len(text) != 2 or text[0] == text[1]:
        raise ParseError(f"glyphs must be two distinct characters, got {text!r}")
    return text
