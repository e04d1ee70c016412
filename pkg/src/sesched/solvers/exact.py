"""Exhaustive search for tiny instances, used to measure greedy gaps."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from ..errors import InfeasibleInstanceError, OracleSizeError
from ..model import ProblemInstance, Schedule, is_feasible
from ..scoring import total_utility

MAX_EVENTS = 8
MAX_INTERVALS = 4
MAX_K = 6


def solve_exact(instance: ProblemInstance) -> tuple[Schedule, float]:
    """Optimal feasible schedule of exactly k events and its utility.

    Enumerates every k-subset of events and every placement of it.  The
    contribution of an interval depends only on the events placed there, so
    per-interval values are memoized.  Ties go to the first schedule in
    enumeration order, i.e. the lexicographically smallest one.
    """
    n_e, n_t, k = instance.num_events, instance.num_intervals, instance.k
    if n_e > MAX_EVENTS or n_t > MAX_INTERVALS or k > MAX_K:
        raise OracleSizeError(
            f"exact search is limited to |E|<={MAX_EVENTS}, |T|<={MAX_INTERVALS}, "
            f"k<={MAX_K}; got |E|={n_e}, |T|={n_t}, k={k}"
        )

    @lru_cache(maxsize=None)
    def interval_value(t, events):
        pairs = [(e, t) for e in events]
        if not is_feasible(pairs, instance):
            return None
        return total_utility(pairs, instance)

    best_pairs, best_value = None, float("-inf")
    for subset in combinations(range(n_e), k):
        for placement in product(range(n_t), repeat=k):
            groups = [[] for _ in range(n_t)]
            for e, t in zip(subset, placement):
                groups[t].append(e)
            value = 0.0
            for t, evs in enumerate(groups):
                if evs:
                    v = interval_value(t, tuple(evs))
                    if v is None:
                        break
                    value += v
            else:
                if value > best_value:
                    best_value = value
                    best_pairs = list(zip(subset, placement))

    if best_pairs is None:
        raise InfeasibleInstanceError(k, 0, "exact")
    schedule = Schedule(instance, best_pairs)
    return schedule, total_utility(schedule, instance)
