import re

import pytest

_CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or item.module.__name__.split(".")[-1] != "test_acceptance":
        return
    doc = (item.function.__doc__ or "").strip().splitlines()
    m = re.match(r"Criterion (\d+):\s*(.*)", doc[0]) if doc else None
    if not m:
        return
    k = int(m.group(1))
    _, ok = _CRITERIA.get(k, (m.group(2), True))
    _CRITERIA[k] = (m.group(2), ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        text, ok = _CRITERIA[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {k:2d}: {text}")
