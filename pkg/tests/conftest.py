import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from thermosc.model import REDUCED, SI, FrequencyModel  # noqa: E402

W0 = 1e6
T_REF = 300.0

_acceptance = []


@pytest.fixture
def si():
    return SI


@pytest.fixture
def reduced():
    return REDUCED


@pytest.fixture
def constant():
    return FrequencyModel(W0)


@pytest.fixture
def lin_pos():
    return FrequencyModel(W0, a1=W0**2 / T_REF)


@pytest.fixture
def quad_pos():
    return FrequencyModel(W0, a2=W0**2 / T_REF**2)


@pytest.fixture
def cubic_pos():
    return FrequencyModel(W0, a3=W0**2 / T_REF**3)


@pytest.fixture
def cubic_neg():
    return FrequencyModel(W0, a3=-(W0**2) / T_REF**3)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
