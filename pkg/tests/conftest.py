import pytest

_results: dict[str, str] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            name = marker.args[0]
            if report.failed:
                _results[name] = "FAIL"
            elif report.passed:
                _results.setdefault(name, "PASS")
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        terminalreporter.write_line(f"{name}: {_results[name]}")
