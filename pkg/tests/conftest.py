import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance_lines = []


@pytest.fixture
def criterion():
    """Context manager factory: records one PASS/FAIL line per acceptance criterion."""

    @contextmanager
    def record(number, title, limit=None):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                status = "FAIL"
            budget = f" / limit {limit:.0f}s" if limit is not None else ""
            line = f"{status}  criterion {number}: {title}  [{elapsed:.2f}s{budget}]"
            _acceptance_lines.append(line)
            print(line)
        if limit is not None:
            assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
