import math
import sys

import pytest

from tanpick import TruncationSpec, build_M, build_m

TANH1 = 0.761594155955764888  # mpmath, 30 digits


@pytest.fixture(scope="session")
def m_big():
    return build_m(TruncationSpec(100_000))


@pytest.fixture(scope="session")
def m_big_raw():
    return build_m(TruncationSpec(100_000, tail_correction=False))


@pytest.fixture(scope="session")
def M_big():
    return build_M(TruncationSpec(100_000))


@pytest.fixture
def tanh1():
    assert math.isclose(TANH1, math.tanh(1.0), rel_tol=1e-15)
    return TANH1


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
