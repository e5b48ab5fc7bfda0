"""Shared test configuration.

The acceptance tests are named test_criterion_NN_*; a terminal-summary hook
collects their outcomes and prints one pass/fail line per criterion at the
end of the run.
"""

import pytest

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    name = item.name
    if not name.startswith("test_criterion_"):
        return
    try:
        num = int(name.split("_")[2])
    except (IndexError, ValueError):
        return
    doc = (item.function.__doc__ or "").strip().splitlines()
    label = doc[0] if doc else name
    if rep.passed:
        status = "PASS"
    elif rep.skipped:
        status = "SKIP"
    else:
        status = "FAIL"
    _ACCEPTANCE[num] = (status, label)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        status, label = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {label}")
