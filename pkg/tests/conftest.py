"""Shared fixtures plus a per-criterion pass/fail summary.

Tests named ``test_criterion_<n>*`` feed an "acceptance criteria" section
printed after the run: one line per criterion, PASS only if every test of
that criterion passed.
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")

# criterion number -> True while all of its finished tests have passed
_results: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    num = int(match.group(1))
    if report.when == "call":
        ok = report.passed
    elif report.failed:  # setup or teardown blew up
        ok = False
    else:
        return
    _results[num] = _results.get(num, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        status = "PASS" if _results[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}")
