"""The four-event, two-interval, two-user toy instance used throughout the docs.

Events e1 and e2 share a stage, so they can never run in the same interval.
Resources are left unconstrained.
"""
from __future__ import annotations

import numpy as np

from .model import ProblemInstance


def running_example(k: int = 3) -> ProblemInstance:
    return ProblemInstance(
        k=k,
        theta=10.0,
        event_location=[0, 0, 1, 2],
        event_resources=[1.0, 1.0, 1.0, 1.0],
        competing_interval=[0, 1],
        # rows are intervals, columns users
        activity=np.array([[0.8, 0.5],
                           [0.5, 0.7]]),
        # rows are events e1..e4
        event_interest=np.array([[0.9, 0.2],
                                 [0.3, 0.6],
                                 [0.0, 0.1],
                                 [0.6, 0.6]]),
        competing_interest=np.array([[0.8, 0.4],
                                     [0.3, 0.7]]),
        event_ids=("e1", "e2", "e3", "e4"),
        interval_ids=("t1", "t2"),
        competing_ids=("c1", "c2"),
        user_ids=("u1", "u2"),
        location_names=("Stage 1", "Room A", "Stage 2"),
    )
