import random

import pytest

from askey_contiguity import families as fam
from askey_contiguity.scalar import rational

ACCEPTANCE_LINES: dict = {}


def make(family: str, N: int, **values):
    """ParameterSet from "p/q" strings or ints."""
    return fam.ParameterSet.make(family, N, {k: rational(v) for k, v in values.items()})


@pytest.fixture
def rng():
    return random.Random(20240517)


def record_acceptance(number: int, ok: bool, text: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
