"""Reference baselines: one-shot top-k (TOP) and uniform random (RAND)."""
from __future__ import annotations

import numpy as np

from ..errors import InfeasibleInstanceError
from ..metrics import SolverReport, Timer, finalize
from ..model import RESOURCE_TOL, Assignment, ProblemInstance, Schedule
from ..scoring import ComputationCounter, ScoreEngine
from ._base import initial_assignments


def solve_top(instance: ProblemInstance) -> tuple[Schedule, SolverReport]:
    """Score every pair once on the empty schedule, then take the best valid ones.

    No score is ever recomputed, so the selection ignores how events sharing
    an interval split their audience.
    """
    timer = Timer()
    counter = ComputationCounter()
    engine = ScoreEngine(instance, counter)
    schedule = engine.schedule
    ranked = sorted((a for lst in initial_assignments(engine) for a in lst), key=Assignment.key)
    gains = []
    for a in ranked:
        if len(schedule) == instance.k:
            break
        counter.assignments_examined += 1
        if schedule.is_valid(a.event, a.interval):
            engine.apply(a.event, a.interval)
            gains.append(a.score)
    if len(schedule) < instance.k:
        raise InfeasibleInstanceError(instance.k, len(schedule), "TOP")
    return schedule, finalize(schedule, instance, counter, timer, solver="TOP", selected_gains=gains)


def solve_rand(instance: ProblemInstance, seed: int = 0) -> tuple[Schedule, SolverReport]:
    """Draw k assignments uniformly among the currently valid ones.

    The result depends only on the instance and ``seed``.  No gains are
    evaluated; ``assignments_examined`` counts the candidates drawn from.
    """
    timer = Timer()
    counter = ComputationCounter()
    rng = np.random.default_rng(seed)
    schedule = Schedule(instance)
    n_t = instance.num_intervals
    loc, res = instance.event_location, instance.event_resources
    valid = np.zeros((instance.num_events, n_t), dtype=bool)
    valid[instance.schedulable] = True

    while len(schedule) < instance.k:
        candidates = np.flatnonzero(valid)
        counter.assignments_examined += candidates.size
        if candidates.size == 0:
            raise InfeasibleInstanceError(instance.k, len(schedule), "RAND")
        e, t = divmod(int(candidates[rng.integers(candidates.size)]), n_t)
        schedule.add(e, t)
        valid[e] = False
        valid[:, t] &= (loc != loc[e]) & (schedule.load[t] + res <= instance.theta + RESOURCE_TOL)

    return schedule, finalize(schedule, instance, counter, timer, solver="RAND", seed=seed)
