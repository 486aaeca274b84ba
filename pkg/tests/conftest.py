import numpy as np
import pytest

from robineig.model import Params, SolverConfig

# one verdict line per acceptance criterion, echoed after the test summary so
# the PASS/FAIL lines are visible even with output capture enabled
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p_default() -> Params:
    return Params(c=0.3, kappa=2.0, beta0=4.0, beta1=4.0)


@pytest.fixture
def cfg_default() -> SolverConfig:
    return SolverConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
