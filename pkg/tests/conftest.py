import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_outcomes = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.failed:
        _outcomes[key] = "FAIL"
    elif report.when == "call":
        _outcomes.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), verdict in sorted(_outcomes.items()):
        terminalreporter.write_line(f"{verdict} criterion {num}: {name.replace('_', ' ')}")
