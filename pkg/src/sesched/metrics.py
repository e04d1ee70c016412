"""Per-solve measurements: utility, score computations, search space, time."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .model import ProblemInstance, Schedule
from .scoring import ComputationCounter, total_utility

CSV_FIELDS = (
    "solver", "k", "E", "T", "U", "utility", "score_computations",
    "assignments_examined", "elapsed_ms", "seed",
)


class Timer:
    """Wall-clock stopwatch with microsecond resolution."""

    def __init__(self):
        self._start = time.perf_counter_ns()
        self._stop = None

    def stop(self):
        if self._stop is None:
            self._stop = time.perf_counter_ns()
        return self

    @property
    def elapsed_us(self) -> int:
        end = self._stop if self._stop is not None else time.perf_counter_ns()
        return (end - self._start) // 1000


@dataclass(frozen=True)
class SolverReport:
    solver: str
    utility: float
    score_computations: int
    assignments_examined: int
    elapsed_us: int
    seed: int | None
    instance_summary: tuple[int, int, int, int]
    gain_evaluations: int = 0
    update_evaluations: int = 0
    selected_gains: tuple[float, ...] = field(default=(), repr=False)

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed_us / 1000.0

    def as_row(self, *, timed: bool = True) -> dict:
        k, n_e, n_t, n_u = self.instance_summary
        return {
            "solver": self.solver,
            "k": k, "E": n_e, "T": n_t, "U": n_u,
            "utility": format(self.utility, ".17g"),
            "score_computations": self.score_computations,
            "assignments_examined": self.assignments_examined,
            "elapsed_ms": f"{self.elapsed_ms:.3f}" if timed else "0",
            "seed": "" if self.seed is None else self.seed,
        }


def finalize(schedule: Schedule, instance: ProblemInstance, counter: ComputationCounter,
             timer: Timer, *, solver: str, seed: int | None = None,
             selected_gains=()) -> SolverReport:
    """Freeze a finished solve into a report.

    The utility is recomputed from scratch; nothing cached by the solver is
    trusted.
    """
    timer.stop()
    return SolverReport(
        solver=solver,
        utility=total_utility(schedule, instance),
        score_computations=counter.score_computations,
        assignments_examined=counter.assignments_examined,
        elapsed_us=timer.elapsed_us,
        seed=seed,
        instance_summary=instance.summary(),
        gain_evaluations=counter.gain_evaluations,
        update_evaluations=counter.update_evaluations,
        selected_gains=tuple(float(g) for g in selected_gains),
    )
