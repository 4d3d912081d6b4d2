import numpy as np
import pytest
from hypothesis import strategies as st

from wtmov.core import WeightedTournament, example_tournament


@pytest.fixture
def t_ex():
    return example_tournament()


@st.composite
def tournaments(draw, min_m=2, max_m=5, min_n=1, max_n=6):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    k = m * (m - 1) // 2
    upper = draw(st.lists(st.integers(0, n), min_size=k, max_size=k))
    w = np.zeros((m, m), dtype=np.int64)
    iu, ju = np.triu_indices(m, 1)
    w[iu, ju] = upper
    w[ju, iu] = n - np.array(upper, dtype=np.int64)
    return WeightedTournament(w, n)


def random_tournament(rng, m, n):
    w = np.zeros((m, m), dtype=np.int64)
    iu, ju = np.triu_indices(m, 1)
    up = rng.integers(0, n, size=len(iu), endpoint=True)
    w[iu, ju] = up
    w[ju, iu] = n - up
    return WeightedTournament(w, n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
