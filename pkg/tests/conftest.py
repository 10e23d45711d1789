"""
Shared fixtures: golden files and a CLI runner
"""
import io
import json
from pathlib import Path

import pytest

from multicomp.cli.main import main

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def golden():
    """Read a golden file from tests/fixtures"""
    def read(name: str) -> str:
        return (FIXTURES_DIR / name).read_text(encoding="utf-8")
    return read


@pytest.fixture(scope="session")
def table5():
    with open(FIXTURES_DIR / "table5.json", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def run_cli():
    """Run the CLI in-process; returns (exit status, stdout text)"""
    def run(*argv: str):
        out = io.StringIO()
        status = main(list(argv), out=out)
        return status, out.getvalue()
    return run
