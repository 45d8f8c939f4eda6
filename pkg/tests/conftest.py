import pytest

from tutte_extremes.corpus import exhaustive, random_corpus

RANDOM_SEED = 1729

# (criterion, passed, detail) lines filled in by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def exhaustive_corpus():
    """Connected bridgeless loopless multigraphs, n <= 5, m <= 9, multiplicity <= 3."""
    return exhaustive(5, 9)


@pytest.fixture(scope="session")
def random_graphs():
    return random_corpus(200, 7, 12, RANDOM_SEED)


@pytest.fixture(scope="session")
def full_corpus(exhaustive_corpus, random_graphs):
    return exhaustive_corpus + random_graphs


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
