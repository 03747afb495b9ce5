import re

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[n] = (m.group(2).replace("_", " "), "PASS" if report.outcome == "passed" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        name, verdict = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {verdict}  {name}")
