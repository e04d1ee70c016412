"""Attendance model, assignment gains and the computation counter.

For a user ``u`` and interval ``t`` the engine keeps

* ``D[t, u]``  total interest of ``u`` in the competing events of ``t``
* ``A[t, u]``  total interest of ``u`` in the events scheduled at ``t``
* ``W[t]``     expected attendance summed over the events scheduled at ``t``

Because the attendance probabilities of all events sharing an interval have
the same denominator, the summed attendance of an interval is
``sum_u activity * A / (D + A)``, and the gain of adding event ``e`` is

    sum_u activity[t, u] * (A + mu_e) / (D + A + mu_e)  -  W[t]

which costs one pass over the users.  A zero denominator contributes zero.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidAssignmentError, MalformedScheduleError, SESError
from .model import ProblemInstance, Schedule, _as_pairs, is_feasible


@dataclass
class ComputationCounter:
    """Exact instrumentation for one solve.

    ``score_computations`` grows by |U| per gain evaluation.  Evaluations that
    recompute a previously scored assignment are also tallied in
    ``update_evaluations``.
    """

    score_computations: int = 0
    assignments_examined: int = 0
    gain_evaluations: int = 0
    update_evaluations: int = 0


def _ratio(num, den):
    return np.divide(num, den, out=np.zeros_like(num), where=den > 0)


class ScoreEngine:
    """Schedule plus the per-(interval, user) aggregates needed for gains.

    Assigned-interest rows are only materialized for intervals that received
    at least one event, so memory grows with the touched intervals.
    """

    def __init__(self, instance: ProblemInstance, counter: ComputationCounter | None = None):
        self.instance = instance
        self.counter = counter if counter is not None else ComputationCounter()
        self.schedule = Schedule(instance)
        self._mu = instance.event_interest
        self._sigma = instance.activity
        D = np.zeros((instance.num_intervals, instance.num_users))
        np.add.at(D, instance.competing_interval, instance.competing_interest)
        self.D = D
        self.W = np.zeros(instance.num_intervals)
        self._A: dict[int, np.ndarray] = {}
        self._zero = np.zeros(instance.num_users)

    def assigned_interest(self, t: int) -> np.ndarray:
        """``A[t, :]``; a shared zero row for untouched intervals."""
        return self._A.get(t, self._zero)

    def gains(self, events, t: int, *, update: bool = False) -> np.ndarray:
        """Gains of adding each of ``events`` to interval ``t`` (one user pass each)."""
        events = np.asarray(events, dtype=np.intp)
        m = len(events)
        c = self.counter
        c.score_computations += m * self.instance.num_users
        c.gain_evaluations += m
        if update:
            c.update_evaluations += m
        if m == 0:
            return np.zeros(0)
        num = self.assigned_interest(t) + self._mu[events]
        frac = _ratio(num, self.D[t] + num)
        return (frac * self._sigma[t]).sum(axis=1) - self.W[t]

    def gain(self, e: int, t: int, *, update: bool = False) -> float:
        if e in self.schedule:
            raise SESError(f"event {e} is already scheduled")
        return float(self.gains([e], t, update=update)[0])

    def apply(self, e: int, t: int) -> None:
        """Insert a valid assignment and refresh the aggregates of ``t``."""
        if not (0 <= e < self.instance.num_events and 0 <= t < self.instance.num_intervals):
            raise MalformedScheduleError(f"assignment ({e}, {t}) does not resolve")
        if not self.schedule.is_valid(e, t):
            raise InvalidAssignmentError(f"assignment of event {e} to interval {t} is not valid")
        self.schedule.add(e, t)
        a = self._A.get(t)
        if a is None:
            a = self._A[t] = np.zeros(self.instance.num_users)
        a += self._mu[e]
        self.W[t] = float((_ratio(a, self.D[t] + a) * self._sigma[t]).sum())

    def attendance_probability(self, u: int, e: int, t: int) -> float:
        """Probability that user ``u`` attends scheduled event ``e`` at ``t``."""
        if self.schedule.interval_of.get(e) != t:
            raise SESError(f"event {e} is not scheduled at interval {t}")
        den = self.D[t, u] + self.assigned_interest(t)[u]
        if den <= 0:
            return 0.0
        return float(self._sigma[t, u] * self._mu[e, u] / den)

    def expected_attendance(self, e: int, t: int) -> float:
        """Expected attendance of scheduled event ``e`` at ``t``."""
        if self.schedule.interval_of.get(e) != t:
            raise SESError(f"event {e} is not scheduled at interval {t}")
        den = self.D[t] + self.assigned_interest(t)
        return float((self._sigma[t] * _ratio(self._mu[e].copy(), den)).sum())


def total_utility(schedule, instance: ProblemInstance) -> float:
    """Total expected attendance of ``schedule``, evaluated from the raw inputs.

    Shares nothing with :class:`ScoreEngine`'s cached aggregates.
    """
    pairs = _as_pairs(schedule)
    if not is_feasible(pairs, instance):
        raise SESError("total utility is only defined for feasible schedules")
    by_interval: dict[int, list[int]] = {}
    for e, t in pairs:
        by_interval.setdefault(t, []).append(e)
    total = 0.0
    for t in sorted(by_interval):
        evs = sorted(by_interval[t])
        comp = list(instance.competing_by_interval[t])
        den = instance.competing_interest[comp].sum(axis=0) + instance.event_interest[evs].sum(axis=0)
        sigma = instance.activity[t]
        for e in evs:
            total += float((sigma * _ratio(instance.event_interest[e].copy(), den)).sum())
    return total


def assignment_gain(engine: ScoreEngine, e: int, t: int) -> float:
    """Gain of adding ``e`` at ``t`` to the engine's current schedule."""
    return engine.gain(e, t)


def apply_assignment(engine: ScoreEngine, e: int, t: int) -> ScoreEngine:
    engine.apply(e, t)
    return engine
