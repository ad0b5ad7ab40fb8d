"""Collects acceptance verdict lines and prints them in the summary."""

import pytest

_LINES = []


def report_line(line):
    _LINES.append(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and rep.failed and "test_criterion" in item.name:
        report_line(f"[acceptance] {item.name}: FAIL")


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
