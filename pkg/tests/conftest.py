"""Shared fixtures: fixture paths, a session tagger, and a CLI runner."""

from __future__ import annotations

import io
import pathlib

import pytest

from corpsum import builtin_tagger, load_index
from corpsum.cli import main

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# The worked-example sentence used throughout the scoring tests.
DC_SENTENCE = (
    "The DC solution of an electric circuit is the solution "
    "where all voltages and currents are constant."
)


@pytest.fixture(scope="session")
def tagger():
    return builtin_tagger()


@pytest.fixture(scope="session")
def fixture_index():
    return load_index(FIXTURES / "index.tsv")


@pytest.fixture
def cli(capsys, monkeypatch):
    """Run the CLI in-process: cli(*argv, stdin=...) -> (code, out, err)."""

    def run(*argv, stdin: str | None = None):
        if stdin is not None:
            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
