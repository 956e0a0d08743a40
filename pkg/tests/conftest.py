import time

import pytest

_acceptance = []


@pytest.fixture
def criterion(request):
    """Per-criterion note, reported in the acceptance summary."""
    state = {"note": "", "t0": time.perf_counter()}
    request.node.user_properties.append(("criterion", state))
    yield state
    state["elapsed"] = time.perf_counter() - state["t0"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    props = dict(item.user_properties)
    if "criterion" in props and (report.when == "call" or report.failed):
        _acceptance.append((item.name, report.passed, props["criterion"]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, state in _acceptance:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if state.get("note"):
            line += f"  -- {state['note']}"
        terminalreporter.write_line(line)
