import math

import pytest

from vecslepian.basis import Bandlimit, BallGeometry
from vecslepian.locmat import Region, assemble
from vecslepian.slepian import solve

DEFAULT_BAND = Bandlimit(6, 12)
DEFAULT_REGION = Region(0.25, 0.75, math.radians(45.0))
UNIT = BallGeometry(1.0)

# acceptance results collected for the terminal summary
ACCEPTANCE_LINES = []


class _DefaultProblems:
    """Lazily assembled and solved default problems, one per system."""

    def __init__(self):
        self._K = {}
        self._basis = {}

    def K(self, sys):
        if sys not in self._K:
            self._K[sys] = assemble(sys, DEFAULT_BAND, DEFAULT_REGION, UNIT)
        return self._K[sys]

    def basis(self, sys):
        if sys not in self._basis:
            self._basis[sys] = solve(self.K(sys))
        return self._basis[sys]


@pytest.fixture(scope="session")
def default_problems():
    return _DefaultProblems()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
