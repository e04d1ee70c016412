import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from sesched import ProblemInstance, running_example

sys.path.insert(0, str(Path(__file__).parent))

unit = st.sampled_from([0.0, 0.1, 0.25, 0.5, 0.9, 1.0]) | st.floats(1e-6, 1)


@st.composite
def instances(draw, max_events=6, max_intervals=3, max_users=4, max_k=None, theta=None,
              values=unit, distinct_locations=False):
    """Small arbitrary instances, including zero interests and shared locations."""
    n_e = draw(st.integers(1, max_events))
    n_t = draw(st.integers(1, max_intervals))
    n_u = draw(st.integers(1, max_users))
    n_c = draw(st.integers(0, 2 * n_t))
    grid = lambda r, c: np.array(draw(st.lists(values, min_size=r * c, max_size=r * c))).reshape(r, c)
    th = theta if theta is not None else draw(st.sampled_from([3.0, 5.0, 100.0]))
    k = draw(st.integers(1, min(n_e, max_k or n_e)))
    return ProblemInstance(
        k=k, theta=th,
        event_location=(list(range(n_e)) if distinct_locations
                        else draw(st.lists(st.integers(0, n_e), min_size=n_e, max_size=n_e))),
        event_resources=draw(st.lists(st.sampled_from([0.0, 1.0, 1.5, 2.0]), min_size=n_e, max_size=n_e)),
        competing_interval=draw(st.lists(st.integers(0, n_t - 1), min_size=n_c, max_size=n_c)),
        activity=grid(n_t, n_u),
        event_interest=grid(n_e, n_u),
        competing_interest=grid(n_c, n_u),
    )


@pytest.fixture
def example_instance():
    return running_example()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
