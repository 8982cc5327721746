from pathlib import Path

import pytest
from hypothesis import strategies as st

from softideal.natset import ep_from_bits
from softideal.workspace import parse_workspace

WORKSPACES = Path(__file__).resolve().parent.parent / "workspaces"


@pytest.fixture
def university():
    return parse_workspace((WORKSPACES / "university.ws").read_text())


@pytest.fixture
def sierpinski():
    return parse_workspace((WORKSPACES / "sierpinski.ws").read_text())


@st.composite
def epsets(draw, max_prefix=4, max_period=6):
    L = draw(st.integers(0, max_prefix))
    p = draw(st.integers(1, max_period))
    pre = draw(st.lists(st.integers(0, 1), min_size=L, max_size=L))
    pat = draw(st.lists(st.integers(0, 1), min_size=p, max_size=p))
    return ep_from_bits(pre, pat)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
