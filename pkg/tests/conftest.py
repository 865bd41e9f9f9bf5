"""Per-criterion PASS/FAIL lines for the acceptance suite."""

import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    entry = _CRITERIA.setdefault(n, {"title": title, "ok": True, "failed": []})
    if rep.failed:
        entry["ok"] = False
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entry = _CRITERIA[n]
        status = "PASS" if entry["ok"] else "FAIL"
        extra = "" if entry["ok"] else f"  [{', '.join(entry['failed'])}]"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {entry['title']}{extra}")
