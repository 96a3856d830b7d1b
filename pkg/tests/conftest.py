from pathlib import Path

import pytest

from orbisectors import catalog

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def records3():
    return catalog.sector_records(3)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
