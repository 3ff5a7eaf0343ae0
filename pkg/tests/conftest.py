import sys

import pytest

from skewnull.ring_core import FiniteField, GaussianRationals, Quaternions

# (p, m, k) triples used throughout
TRIPLES = [(2, 2, 1), (3, 2, 1), (2, 4, 1), (2, 4, 2), (5, 2, 1)]


@pytest.fixture(scope="session")
def F4():
    return FiniteField(2, 2, 1)


@pytest.fixture(scope="session")
def F8():
    return FiniteField(2, 3, 1)


@pytest.fixture(scope="session")
def F9():
    return FiniteField(3, 2, 1)


@pytest.fixture(scope="session")
def QQi():
    return GaussianRationals()


@pytest.fixture(scope="session")
def H():
    return Quaternions()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
