"""Per-criterion summary for the acceptance suite.

Tests marked ``@pytest.mark.criterion(n, "title")`` are collected here and
reported as one PASS/FAIL line each at the end of the session.  Notes
appended to ``request.node.user_properties`` under the key ``"report"`` are
printed under their criterion.
"""

import pytest

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "ran": False, "notes": []})
    if report.when == "call":
        entry["ran"] = True
        entry["seconds"] = report.duration
        entry["notes"] += [v for k, v in item.user_properties if k == "report"]
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        if not entry["ran"]:
            status = "SKIP" if entry["ok"] else "FAIL"
        else:
            status = "PASS" if entry["ok"] else "FAIL"
        seconds = entry.get("seconds")
        timing = f" ({seconds:.1f}s)" if seconds is not None else ""
        terminalreporter.write_line(f"[{status}] criterion {number}: {entry['title']}{timing}")
        for note in entry["notes"]:
            terminalreporter.write_line(f"         {note}")
