import pytest

from novikov_forge.catalog import all_instances

_CRITERIA: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def instances():
    """Every catalog instance at the default grids."""
    return all_instances()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[number] = ("PASS" if rep.passed else "FAIL", title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA, key=int):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2} {status}: {title}")
