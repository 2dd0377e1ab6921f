"""Shared pytest wiring: the acceptance-line reporter.

Each acceptance test registers exactly one PASS/FAIL line.  The lines are
echoed in a dedicated terminal section after the run so they stay visible in
a plain ``pytest -v`` transcript regardless of output capture.
"""

from __future__ import annotations

import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def announce():
    """Register one acceptance-result line for the end-of-run summary."""

    def _announce(line: str) -> None:
        _ACCEPTANCE_LINES.append(line)

    return _announce


def pytest_terminal_summary(terminalreporter) -> None:
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
