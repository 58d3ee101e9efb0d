import pytest

from warnsdorff import kernel
from warnsdorff.census import order_failure_counts, summarize
from warnsdorff.heuristic import TieBreakPolicy

ACCEPTANCE = {}
N_CRITERIA = 9


@pytest.fixture(scope="session")
def failures_first():
    return order_failure_counts(TieBreakPolicy.FIRST)


@pytest.fixture(scope="session")
def failures_last():
    return order_failure_counts(TieBreakPolicy.LAST)


@pytest.fixture(scope="session")
def census_first(failures_first):
    return summarize(failures_first, TieBreakPolicy.FIRST, 8)


@pytest.fixture(scope="session")
def census_last(failures_last):
    return summarize(failures_last, TieBreakPolicy.LAST, 8)


@pytest.fixture(params=kernel.available())
def backend(request):
    return kernel.load(request.param)


@pytest.fixture
def criterion():
    """Record an acceptance criterion's outcome for the terminal summary."""

    def record(number, title, ok):
        ACCEPTANCE[number] = (title, bool(ok))
        assert ok, f"criterion {number} failed: {title}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, N_CRITERIA + 1):
        title, ok = ACCEPTANCE.get(number, ("not reached", False))
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
