import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(number, title): acceptance criterion this test certifies")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    reporter = item.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line(f"acceptance criterion {number:2d}"
                            f" [{title}]: {status}")
