import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    detail = ""
    if report.failed:
        detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else "failed"
    _criteria.append((marker.args[0], report.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
    passed = sum(1 for _, p, _ in _criteria if p)
    terminalreporter.write_line(f"{passed}/{len(_criteria)} criteria passed")
