import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from goldbachnet import build_table

_ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def table_2k():
    return build_table(2_000)


@pytest.fixture(scope="session")
def table_30k():
    return build_table(30_000)


@pytest.fixture(scope="session")
def table_1m():
    return build_table(1_000_000)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if match:
        _ACCEPTANCE_RESULTS[int(match.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_ACCEPTANCE_RESULTS):
        outcome = _ACCEPTANCE_RESULTS[num]
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d}: {word}")
