from __future__ import annotations

from functools import lru_cache

import pytest

from twisted_doubles.cocycle import catalog
from twisted_doubles.double import TwistedDouble


@lru_cache(maxsize=None)
def double_for(name: str) -> TwistedDouble:
    g, w = catalog(name)
    return TwistedDouble(g, w)


@pytest.fixture
def dbl():
    return double_for


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
