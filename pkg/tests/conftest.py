from pathlib import Path

import pytest

from arabic_rhetoric.lexicon import load_lexicon

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lex():
    return load_lexicon()


@pytest.fixture
def sample_path():
    return DATA / "sample_tweets.jsonl"


_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if report.failed:
        _criteria[name] = "FAIL"
    elif report.when == "call":
        _criteria.setdefault(name, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _criteria.items():
        terminalreporter.write_line(f"{status}  {name}")
