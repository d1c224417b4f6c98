import pytest

ACCEPTANCE_LINES: list = []


def pytest_addoption(parser):
    parser.addoption("--long-run", action="store_true", default=False, help="run the long-running reproductions")


def pytest_configure(config):
    config.addinivalue_line("markers", "longrun: needs --long-run (minutes of runtime)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-run"):
        return
    skip = pytest.mark.skip(reason="long-running; pass --long-run")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
