"""Shared fixtures for the EcaSeq test suite"""
import io
import json

import pytest
from hypothesis import strategies as st

from app import EcaSeqApp
from automata.configuration import Configuration
from automata.modes import SequentialMode


def configurations(min_n: int = 3, max_n: int = 8):
    """Strategy drawing a ring size and a configuration on it"""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.integers(0, (1 << n) - 1).map(lambda bits: Configuration(n, bits)))


def sequential_modes(n: int):
    return st.permutations(list(range(n))).map(lambda order: SequentialMode(tuple(order)))


def word(text: str) -> Configuration:
    return Configuration.from_cells(int(ch) for ch in text)


@pytest.fixture
def app_home(tmp_path, monkeypatch):
    """Point the application directories at a temporary folder"""
    monkeypatch.setenv("ECASEQ_HOME", str(tmp_path))
    return tmp_path


class CliResult:
    def __init__(self, code: int, out: str):
        self.code = code
        self.out = out

    def json(self) -> dict:
        return json.loads(self.out)


@pytest.fixture
def run_cli(app_home):
    """Run the command line in-process and capture stdout"""
    def runner(*args: str) -> CliResult:
        stdout = io.StringIO()
        code = EcaSeqApp(["ecaseq", "--no-log-file", *args], stdout=stdout).execute()
        return CliResult(code, stdout.getvalue())
    return runner
