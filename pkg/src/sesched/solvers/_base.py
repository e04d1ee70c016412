from __future__ import annotations

import numpy as np

from ..model import Assignment
from ..scoring import ScoreEngine


def initial_assignments(engine: ScoreEngine) -> list[list[Assignment]]:
    """Score every (event, interval) pair that is feasible on an empty schedule.

    Returns one list per interval, events in ascending id order.  Events that
    can never fit (resource demand above the budget) are not scored.
    """
    inst = engine.instance
    events = np.flatnonzero(inst.schedulable)
    lists = []
    for t in range(inst.num_intervals):
        scores = engine.gains(events, t)
        lists.append([Assignment(int(e), t, float(s)) for e, s in zip(events, scores)])
    return lists


def best(assignments, key=Assignment.key):
    """Top assignment under ``key`` or None."""
    return min(assignments, key=key, default=None)
