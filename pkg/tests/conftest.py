import random

import pytest
from hypothesis import strategies as st

from ramp_fim.dataset import TransactionDatabase, build_root_index, sample_database

A, B, C, D, E, I = 0, 1, 2, 3, 4, 8


def random_database(rng: random.Random, max_items: int = 12, max_rows: int = 30) -> TransactionDatabase:
    n_items = rng.randint(1, max_items)
    n_rows = rng.randint(0, max_rows)
    density = rng.random()
    rows = [[i for i in range(n_items) if rng.random() < density] for _ in range(n_rows)]
    return TransactionDatabase.from_iterable(rows)


def random_cases(count: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_database(rng), rng.randint(1, 5)


small_databases = st.lists(
    st.lists(st.integers(min_value=0, max_value=9), max_size=9), max_size=25
).map(TransactionDatabase.from_iterable)


@pytest.fixture
def sample_db():
    return sample_database()


@pytest.fixture
def sample_root(sample_db):
    """min_sup 2, rows in input order, so bit r is transaction r + 1."""
    return build_root_index(sample_db, 2, width=64, row_order="original")


def internal(root, original_id: int) -> int:
    return [i for i, _ in root.frequent_items].index(original_id)


# Acceptance-criterion report lines, printed at the end of the session.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
