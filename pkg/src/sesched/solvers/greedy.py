"""Plain greedy (ALG) and greedy with incremental updating (INC).

Both select, at every step, the valid assignment with the largest gain.  ALG
recomputes every assignment of the interval that just received an event.
INC keeps stale scores around: a stale score never underestimates the true
gain, so only stale assignments whose cached score reaches the bound (the best
up-to-date valid score) need recomputing before a selection.
"""
from __future__ import annotations

import heapq

from ..errors import InfeasibleInstanceError
from ..metrics import SolverReport, Timer, finalize
from ..model import Assignment, ProblemInstance, Schedule
from ..scoring import ComputationCounter, ScoreEngine
from ._base import best, initial_assignments


def solve_alg(instance: ProblemInstance, *, trace: list | None = None) -> tuple[Schedule, SolverReport]:
    """Greedy selection with full recomputation of the selected interval.

    Every step traverses all remaining assignments once: invalid ones are
    dropped, those of the previously selected interval are rescored, and the
    top one is selected.  If ``trace`` is a list, one dict per step is
    appended with the scores seen and the selection.
    """
    timer = Timer()
    counter = ComputationCounter()
    engine = ScoreEngine(instance, counter)
    schedule = engine.schedule
    pool = [a for per_interval in initial_assignments(engine) for a in per_interval]
    gains = []
    last = None

    while len(schedule) < instance.k:
        keep, stale = [], []
        for a in pool:
            counter.assignments_examined += 1
            if schedule.is_valid(a.event, a.interval):
                keep.append(a)
                if a.interval == last:
                    stale.append(a)
        if stale:
            scores = engine.gains([a.event for a in stale], last, update=True)
            for a, s in zip(stale, scores):
                a.score = float(s)
        pool = keep
        chosen = best(pool)
        if chosen is None:
            raise InfeasibleInstanceError(instance.k, len(schedule), "ALG")
        if trace is not None:
            trace.append({
                "scores": {(a.event, a.interval): a.score for a in pool},
                "updated": [(a.event, a.interval) for a in stale],
                "select": (chosen.event, chosen.interval),
            })
        engine.apply(chosen.event, chosen.interval)
        gains.append(chosen.score)
        last = chosen.interval

    return schedule, finalize(schedule, instance, counter, timer, solver="ALG", selected_gains=gains)


def _reversed_ties(a: Assignment):
    return (-a.score, -a.event, a.interval)


def solve_inc(instance: ProblemInstance, *, trace: list | None = None,
              reverse_ties: bool = False) -> tuple[Schedule, SolverReport]:
    """Greedy selection with bound-driven incremental updates.

    Per interval the solver keeps a heap of up-to-date ("fresh") assignments,
    a heap of stale ones, and the top fresh valid assignment.  Before each
    selection the bound is the best of those interval tops; stale assignments
    are then visited in descending cached score across all intervals and
    recomputed while their cached score is at least the bound, which rises as
    recomputed scores beat it.  Intervals whose best stale score is below the
    bound are never touched.

    ``reverse_ties`` flips the event tie-break and exists only so the
    verification suite can show that it detects a broken tie-break.
    """
    key = _reversed_ties if reverse_ties else Assignment.key
    timer = Timer()
    counter = ComputationCounter()
    engine = ScoreEngine(instance, counter)
    schedule = engine.schedule
    n_t = instance.num_intervals

    fresh: list[list] = []
    stale: list[list] = [[] for _ in range(n_t)]
    for per_interval in initial_assignments(engine):
        heap = [(key(a), a) for a in per_interval]
        heapq.heapify(heap)
        fresh.append(heap)

    def valid_top(t):
        heap = fresh[t]
        while heap:
            counter.assignments_examined += 1
            a = heap[0][1]
            if schedule.is_valid(a.event, t):
                return a
            heapq.heappop(heap)
        return None

    top = [valid_top(t) for t in range(n_t)]
    gains = []

    while len(schedule) < instance.k:
        bound = min((a for a in top if a is not None), key=key, default=None)
        updated = []
        frontier = [(stale[t][0][0], t) for t in range(n_t) if stale[t]]
        heapq.heapify(frontier)
        while frontier:
            cached_key, t = frontier[0]
            if bound is not None and -cached_key[0] < bound.score:
                break
            heapq.heappop(frontier)
            _, a = heapq.heappop(stale[t])
            counter.assignments_examined += 1
            if schedule.is_valid(a.event, t):
                a.score = engine.gain(a.event, t, update=True)
                a.updated = True
                heapq.heappush(fresh[t], (key(a), a))
                updated.append((a.event, t))
                if top[t] is None or key(a) < key(top[t]):
                    top[t] = a
                if bound is None or key(a) < key(bound):
                    bound = a
            if stale[t]:
                heapq.heappush(frontier, (stale[t][0][0], t))

        if bound is None:
            raise InfeasibleInstanceError(instance.k, len(schedule), "INC")
        chosen = bound
        if trace is not None:
            trace.append({"updated": updated, "select": (chosen.event, chosen.interval),
                          "bound": chosen.score})
        engine.apply(chosen.event, chosen.interval)
        gains.append(chosen.score)
        if len(schedule) == instance.k:
            break

        tp, ep = chosen.interval, chosen.event
        for _, a in fresh[tp]:
            a.updated = False
        stale[tp].extend(fresh[tp])
        heapq.heapify(stale[tp])
        fresh[tp] = []
        top[tp] = None
        for t in range(n_t):
            if top[t] is not None and top[t].event == ep:
                top[t] = valid_top(t)

    return schedule, finalize(schedule, instance, counter, timer, solver="INC", selected_gains=gains)
