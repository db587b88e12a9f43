import re

import pytest

# outcome of each acceptance criterion, keyed by criterion number
_acceptance_results: dict[int, tuple[str, str]] = {}

_CRITERION_PATTERN = re.compile(r"test_criterion_(\d+)_(\w+)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    match = _CRITERION_PATTERN.match(item.name)
    if match and "test_acceptance" in item.nodeid:
        number = int(match.group(1))
        label = match.group(2).replace("_", " ")
        status = "PASS" if report.passed else "FAIL"
        _acceptance_results[number] = (label, status)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        label, status = _acceptance_results[number]
        terminalreporter.write_line(f"criterion {number} ({label}): {status}")
