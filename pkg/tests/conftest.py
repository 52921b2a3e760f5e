import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=40, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("ci", max_examples=15, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> [(test name, outcome, was an expected failure)]
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or rep.outcome != "passed"):
        _CRITERIA.setdefault(mark.args[0], []).append(
            (item.name, rep.outcome, hasattr(rep, "wasxfail")))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        rows = _CRITERIA[n]
        ok = all(outcome == "passed" and not xf for _, outcome, xf in rows if not xf)
        literal = [name for name, outcome, xf in rows if xf and outcome == "skipped"]
        line = f"criterion {n:2}: {'PASS' if ok else 'FAIL'}"
        if literal:
            line += f"; literal subpart FAIL (xfail strict): {', '.join(literal)}"
        terminalreporter.write_line(line)
