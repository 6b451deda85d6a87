import numpy as np
import pytest

_acceptance_lines = []


@pytest.fixture
def rng():
    return np.random.default_rng(20141028)


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion test."""
    lines = {}

    def record(label):
        lines["label"] = label

    yield record
    label = lines.get("label", request.node.name)
    report = getattr(request.node, "rep_call", None)
    status = "PASS" if report is not None and report.passed else "FAIL"
    _acceptance_lines.append(f"[{status}] {label}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
