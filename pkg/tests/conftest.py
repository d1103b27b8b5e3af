import pytest

_LOG: dict = {}


@pytest.fixture(scope="session")
def acceptance_log():
    return _LOG


def pytest_terminal_summary(terminalreporter):
    if not _LOG:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_LOG):
        title, ok = _LOG[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")
