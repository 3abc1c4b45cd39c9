from __future__ import annotations

import pytest

from qweyl.coeffring import CoeffRing


@pytest.fixture
def ore():
    """The s = 1 ring, with mu = alpha0 and nu = alpha1."""
    r = CoeffRing(1)
    return r, r.q, r.alpha(0), r.alpha(1)


_CRITERIA_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record a criterion's pass/fail line, print it, and fail the test when it is false."""

    def _verdict(number: int, ok: bool, detail: str, elapsed: float | None = None):
        timing = f" ({elapsed:.2f} s)" if elapsed is not None else ""
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}{timing}"
        _CRITERIA_LINES.append(line)
        print(line)
        assert ok, line

    return _verdict


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA_LINES:
            terminalreporter.write_line(line)
