import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symkeys import sjdt  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def _weight_checked_slides(monkeypatch):
    """Every elementary slide executed by any test re-checks the weight."""
    monkeypatch.setattr(sjdt, "CHECK_INVARIANTS", True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
