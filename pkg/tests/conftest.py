from __future__ import annotations

from importlib.resources import files

import pytest


@pytest.fixture
def example_paths():
    data = files("cwtight") / "data"
    return str(data / "example_complex.json"), str(data / "example_map.json")


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
