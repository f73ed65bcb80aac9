import json
import pathlib

import pytest

import acceptance_report
from zippersem.formats import load_automaton

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def pytest_terminal_summary(terminalreporter):
    if acceptance_report.lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_report.lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def silent_fork():
    """Five-node automaton with a silent fork at the start node.

    1 -t-> 2, 1 -t-> 3, 2 -a:=true-> 4, 3 -b:=true-> 5, 4 -b:=true-> 5,
    5 -c:=true-> 3.  Small enough to close by hand, rich enough to exercise
    a non-singleton closure and a cycle through the observable part.
    """
    with open(FIXTURES / "silent_fork.json", encoding="utf-8") as fh:
        return load_automaton(json.load(fh))
