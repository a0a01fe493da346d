import sys
from pathlib import Path

import pytest

from kdst import parse_instance

DATA = Path(__file__).parent / "data"


def load(name):
    return parse_instance((DATA / name).read_text())


@pytest.fixture
def fix_a():
    return load("fixA.kdst")


@pytest.fixture
def fix_b():
    return load("fixB.kdst")


@pytest.fixture
def fix_c():
    return load("fixC.kdst")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
