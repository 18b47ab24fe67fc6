import pytest

_verdicts = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and report.passed:
        return
    key = mark.args
    ok = report.passed
    _verdicts[key] = _verdicts.get(key, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_verdicts.items()):
        terminalreporter.write_line(f"AC{number:<3} {'PASS' if ok else 'FAIL'}  {title}")
