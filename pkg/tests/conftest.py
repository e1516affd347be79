"""Shared test helpers: precision hygiene and a CLI harness.

Every test runs with the process-wide mpmath precision restored afterwards,
so a test that raises mid-``workdps`` (or sets ``mp.mp.dps`` directly) cannot
poison its neighbours.  The CLI harness drives ``cli.main`` in-process and
captures both streams, which keeps the full suite subprocess-free and fast.
"""
from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

import mpmath as mp
import pytest

from gammatheta import cli


@pytest.fixture(autouse=True)
def _restore_mp_precision():
    dps = mp.mp.dps
    yield
    mp.mp.dps = dps


@dataclass(frozen=True)
class CliResult:
    code: int
    out: str
    err: str

    @property
    def lines(self) -> list[str]:
        return [line for line in self.out.splitlines() if line]


def run_cli(*argv: str) -> CliResult:
    """Run the command-line entry point in-process and capture its streams."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return CliResult(code=code, out=out.getvalue(), err=err.getvalue())


@pytest.fixture
def cli_runner():
    return run_cli
