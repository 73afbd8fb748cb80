import sys
from pathlib import Path

import hypothesis
import pytest

from reslat import fixtures
from reslat.search import build_corpus

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def ex1():
    return fixtures.example1()


@pytest.fixture
def ex2():
    return fixtures.example2()


@pytest.fixture
def ex3():
    return fixtures.example3()


@pytest.fixture(scope="session")
def corpus5():
    return build_corpus(5)


# One summary line per acceptance criterion, whatever the capture mode.
_criteria: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    if report.when == "call" or report.failed:
        prev = _criteria.get(number, (title, True))[1]
        _criteria[number] = (title, prev and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
