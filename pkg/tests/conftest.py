import pytest

from ringenv.config import limits
from ringenv.corpus import CORPUS_LIMITS, corpus_rings


@pytest.fixture
def corpus_limits():
    with limits(**CORPUS_LIMITS):
        yield


@pytest.fixture
def corpus(corpus_limits):
    return corpus_rings()


@pytest.fixture
def small_corpus(corpus_limits):
    return [(e, R) for e, R in corpus_rings() if R.order <= 12]


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
