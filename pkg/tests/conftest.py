"""Shared fixtures and the acceptance-summary hook."""

import re

import pytest

from einpoly.homspace import load_catalog

_ACCEPTANCE_RESULTS = {}
_ACCEPTANCE_DESCRIPTIONS = {}


def record_criterion(number: int, description: str):
    """Called by acceptance tests so the terminal summary can print one
    pass/fail line per criterion."""
    _ACCEPTANCE_DESCRIPTIONS[number] = description


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m and report.when == "call":
        _ACCEPTANCE_RESULTS[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_ACCEPTANCE_RESULTS):
        outcome = _ACCEPTANCE_RESULTS[num]
        desc = _ACCEPTANCE_DESCRIPTIONS.get(num, "")
        status = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {desc}")


@pytest.fixture(scope="session")
def su3_t2():
    return load_catalog("su3_t2")


@pytest.fixture(scope="session")
def wang_ziller_killing():
    return load_catalog("wang_ziller_killing")


@pytest.fixture(scope="session")
def wang_ziller_q():
    return load_catalog("wang_ziller_q")


@pytest.fixture(scope="session")
def sphere_s3():
    return load_catalog("sphere_s3")


@pytest.fixture(scope="session")
def e8_d5():
    return load_catalog("e8_t1_a3_a4")


@pytest.fixture(scope="session")
def e8_d6():
    return load_catalog("e8_t1_a4_a2_a1")
