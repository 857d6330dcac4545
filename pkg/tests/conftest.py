import pytest

from cubicinv.textform import parse_poly
from helpers import FERMAT

# (criterion, status, detail) lines appended by the acceptance module
ACCEPTANCE_LINES: list[tuple[str, str, str]] = []


@pytest.fixture
def fermat():
    return parse_poly(FERMAT)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"{status} {name}: {detail}")
