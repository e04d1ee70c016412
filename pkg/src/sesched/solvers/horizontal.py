"""Horizontal selection (HOR) and its incremental variant (HOR-I).

Each iteration picks at most one assignment per interval, taking interval
tops in descending score order.  Since an interval's contents do not change
until its single pick of the iteration, no score goes stale mid-iteration and
updates are deferred to the iteration boundary.  HOR rescores every remaining
valid assignment there; HOR-I walks each interval list in descending cached
score and rescores a stale entry only while its cached score reaches the best
fresh score seen so far in that interval.
"""
from __future__ import annotations

from ..errors import InfeasibleInstanceError
from ..metrics import SolverReport, Timer, finalize
from ..model import Assignment, ProblemInstance, Schedule
from ..scoring import ComputationCounter, ScoreEngine
from ._base import best, initial_assignments


class _Horizontal:
    def __init__(self, instance, incremental, trace):
        self.instance = instance
        self.incremental = incremental
        self.trace = trace
        self.counter = ComputationCounter()
        self.engine = ScoreEngine(instance, self.counter)
        self.schedule = self.engine.schedule
        self.lists: list[list[Assignment]] = []
        self.gains: list[float] = []

    def rebuild(self):
        """HOR iteration boundary: rescore all remaining valid assignments."""
        inst, schedule = self.instance, self.schedule
        remaining = [e for e in range(inst.num_events)
                     if e not in schedule and inst.schedulable[e]]
        top = {}
        for t in range(inst.num_intervals):
            self.counter.assignments_examined += len(remaining)
            events = [e for e in remaining if schedule.fits(e, t)]
            scores = self.engine.gains(events, t, update=True)
            self.lists[t] = [Assignment(e, t, float(s)) for e, s in zip(events, scores)]
            if self.lists[t]:
                top[t] = best(self.lists[t])
        return top

    def bounded_pass(self, t):
        """Drop invalid entries of interval ``t`` and return its true top.

        Entries are visited in descending cached score; a stale entry is
        rescored only if its cached score is at least the best fresh score
        found so far.  A stale entry left alone cannot beat that score, since
        cached scores never underestimate.
        """
        schedule, engine = self.schedule, self.engine
        entries = sorted(self.lists[t], key=Assignment.key)
        keep, top = [], None
        for a in entries:
            self.counter.assignments_examined += 1
            if not schedule.is_valid(a.event, t):
                continue
            keep.append(a)
            if not a.updated and (top is None or a.score >= top.score):
                a.score = engine.gain(a.event, t, update=True)
                a.updated = True
            if a.updated and (top is None or a.key() < top.key()):
                top = a
        self.lists[t] = keep
        return top

    def refill(self, t):
        """Top of interval ``t`` after its previous top's event was taken."""
        if self.incremental:
            return self.bounded_pass(t)
        keep = []
        for a in self.lists[t]:
            self.counter.assignments_examined += 1
            if self.schedule.is_valid(a.event, t):
                keep.append(a)
        self.lists[t] = keep
        return best(keep)

    def run(self):
        inst, schedule = self.instance, self.schedule
        iteration = 0
        while len(schedule) < inst.k:
            iteration += 1
            if iteration == 1:
                self.lists = initial_assignments(self.engine)
                top = {t: best(lst) for t, lst in enumerate(self.lists) if lst}
            elif self.incremental:
                top = {}
                for t in range(inst.num_intervals):
                    a = self.bounded_pass(t)
                    if a is not None:
                        top[t] = a
            else:
                top = self.rebuild()

            placed = []
            while top and len(schedule) < inst.k:
                tp = min(top, key=lambda t: top[t].key())
                a = top.pop(tp)
                if a.event not in schedule:
                    self.engine.apply(a.event, tp)
                    self.gains.append(a.score)
                    placed.append((a.event, tp))
                    for other in self.lists[tp]:
                        other.updated = False
                else:
                    nxt = self.refill(tp)
                    if nxt is not None:
                        top[tp] = nxt
            if self.trace is not None:
                self.trace.append({"iteration": iteration, "placed": placed,
                                   "updates": self.counter.update_evaluations})
            if not placed:
                raise InfeasibleInstanceError(inst.k, len(schedule),
                                              "HOR-I" if self.incremental else "HOR")
        return schedule


def solve_hor(instance: ProblemInstance, *, trace: list | None = None) -> tuple[Schedule, SolverReport]:
    """Horizontal selection, rescoring everything between iterations."""
    timer = Timer()
    h = _Horizontal(instance, False, trace)
    schedule = h.run()
    return schedule, finalize(schedule, instance, h.counter, timer, solver="HOR", selected_gains=h.gains)


def solve_hor_i(instance: ProblemInstance, *, trace: list | None = None) -> tuple[Schedule, SolverReport]:
    """Horizontal selection with bounded incremental rescoring."""
    timer = Timer()
    h = _Horizontal(instance, True, trace)
    schedule = h.run()
    return schedule, finalize(schedule, instance, h.counter, timer, solver="HOR-I", selected_gains=h.gains)
