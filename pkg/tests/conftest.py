import re

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    num, name = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        verdict = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        if num not in _CRITERIA or _CRITERIA[num][1] == "PASS":
            _CRITERIA[num] = (name, verdict)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        name, verdict = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d} {verdict:4s} {name}")
