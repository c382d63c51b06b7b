"""Shared fixtures and the acceptance-summary reporter."""

import re

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if match:
        num, name = match.groups()
        _acceptance_results[int(num)] = (name, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_acceptance_results):
        name, outcome = _acceptance_results[num]
        status = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(
            f"criterion {num:2d} ({name.replace('_', ' ')}): {status}")
