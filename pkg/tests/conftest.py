from __future__ import annotations

import pytest

import corpus


@pytest.fixture(scope="session")
def C1():
    return corpus.c1()


@pytest.fixture(scope="session")
def C2():
    return corpus.c2()


@pytest.fixture(scope="session")
def G1(C1):
    return corpus.sigma_group(C1)


@pytest.fixture(scope="session")
def G2(C2):
    return corpus.sigma_group(C2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
