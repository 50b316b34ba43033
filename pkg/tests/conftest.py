import pytest

_criteria: list[tuple[str, str, str]] = []


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _criteria.append((props["criterion"], report.outcome.upper(), props.get("summary", "")))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, summary in sorted(_criteria, key=lambda x: int(x[0])):
        word = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"criterion {name}: {word}  {summary}")
