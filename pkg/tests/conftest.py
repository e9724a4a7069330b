import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lauder.zoo import zoo_contexts  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def contexts():
    return zoo_contexts()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
