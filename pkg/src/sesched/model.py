"""Problem entities, schedules and the feasibility predicates.

A :class:`ProblemInstance` stores everything densely, indexed by contiguous
integer ids:

* ``event_interest``      (|E|, |U|)  interest of each user in each candidate event
* ``competing_interest``  (|C|, |U|)  interest of each user in each competing event
* ``activity``            (|T|, |U|)  social activity probability per interval

Arrays are laid out with users on the last axis so that the per-user pass of a
gain evaluation reads contiguous memory.  External string ids are kept
alongside for serialization.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidAssignmentError, MalformedScheduleError, ParameterError

# Absolute slack on the resources constraint; resource sums are floats.
RESOURCE_TOL = 1e-9


class CandidateEvent(NamedTuple):
    id: int
    location: int
    required_resources: float


class CompetingEvent(NamedTuple):
    id: int
    interval: int


class TimeInterval(NamedTuple):
    id: int
    competing: tuple[int, ...]


class User(NamedTuple):
    """Sparse view of one user; missing entries mean zero."""

    id: int
    event_interest: dict[int, float]
    competing_interest: dict[int, float]
    activity: dict[int, float]


def _labels(given, n, prefix):
    if given is None:
        return tuple(f"{prefix}{i + 1}" for i in range(n))
    given = tuple(str(x) for x in given)
    if len(given) != n:
        raise ParameterError(f"expected {n} {prefix!r} labels, got {len(given)}")
    if len(set(given)) != n:
        raise ParameterError(f"duplicate {prefix!r} labels")
    return given


def _frozen(a, dtype, ndim, name):
    a = np.array(a, dtype=dtype, copy=True)
    if a.ndim != ndim:
        raise ParameterError(f"{name} must be {ndim}-dimensional, got shape {a.shape}")
    a.setflags(write=False)
    return a


def _check_unit(a, name):
    if a.size and (not np.all(np.isfinite(a)) or a.min() < 0.0 or a.max() > 1.0):
        raise ParameterError(f"{name} values must lie in [0, 1]")


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """Immutable bundle of intervals, events, competing events and users."""

    k: int
    theta: float
    event_location: np.ndarray
    event_resources: np.ndarray
    competing_interval: np.ndarray
    activity: np.ndarray
    event_interest: np.ndarray
    competing_interest: np.ndarray
    event_ids: tuple[str, ...] | None = None
    interval_ids: tuple[str, ...] | None = None
    competing_ids: tuple[str, ...] | None = None
    user_ids: tuple[str, ...] | None = None
    location_names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        put = object.__setattr__
        if int(self.k) != self.k or self.k < 1:
            raise ParameterError(f"k must be a positive integer, got {self.k!r}")
        if not np.isfinite(self.theta) or self.theta <= 0:
            raise ParameterError(f"available resources must be positive, got {self.theta!r}")
        put(self, "k", int(self.k))
        put(self, "theta", float(self.theta))

        loc = _frozen(self.event_location, np.intp, 1, "event_location")
        res = _frozen(self.event_resources, np.float64, 1, "event_resources")
        comp = _frozen(self.competing_interval, np.intp, 1, "competing_interval")
        act = _frozen(self.activity, np.float64, 2, "activity")
        mu_e = _frozen(self.event_interest, np.float64, 2, "event_interest")
        mu_c = _frozen(self.competing_interest, np.float64, 2, "competing_interest")

        n_e, n_t, n_c, n_u = len(loc), act.shape[0], len(comp), act.shape[1]
        if len(res) != n_e or mu_e.shape != (n_e, n_u):
            raise ParameterError("event arrays disagree on the number of events/users")
        if mu_c.shape != (n_c, n_u):
            raise ParameterError("competing_interest must have shape (|C|, |U|)")
        if res.size and (not np.all(np.isfinite(res)) or res.min() < 0):
            raise ParameterError("required resources must be non-negative")
        if comp.size and (comp.min() < 0 or comp.max() >= n_t):
            raise ParameterError("a competing event refers to a missing interval")
        if loc.size and loc.min() < 0:
            raise ParameterError("location codes must be non-negative")
        for a, name in ((act, "activity"), (mu_e, "event interest"), (mu_c, "competing interest")):
            _check_unit(a, name)

        for name, a in (("event_location", loc), ("event_resources", res),
                        ("competing_interval", comp), ("activity", act),
                        ("event_interest", mu_e), ("competing_interest", mu_c)):
            put(self, name, a)

        n_loc = int(loc.max()) + 1 if loc.size else 0
        if self.location_names is not None:
            names = tuple(str(x) for x in self.location_names)
            if len(names) < n_loc:
                raise ParameterError("fewer location names than location codes")
            put(self, "location_names", names)
        else:
            put(self, "location_names", tuple(f"L{i}" for i in range(n_loc)))
        put(self, "event_ids", _labels(self.event_ids, n_e, "e"))
        put(self, "interval_ids", _labels(self.interval_ids, n_t, "t"))
        put(self, "competing_ids", _labels(self.competing_ids, n_c, "c"))
        put(self, "user_ids", _labels(self.user_ids, n_u, "u"))

        oversized = np.flatnonzero(res > self.theta + RESOURCE_TOL)
        if oversized.size:
            warnings.warn(
                f"{oversized.size} event(s) need more resources than available "
                f"(theta={self.theta}) and can never be scheduled",
                stacklevel=3,
            )

    @property
    def num_events(self) -> int:
        return len(self.event_location)

    @property
    def num_intervals(self) -> int:
        return self.activity.shape[0]

    @property
    def num_users(self) -> int:
        return self.activity.shape[1]

    @property
    def num_competing(self) -> int:
        return len(self.competing_interval)

    @cached_property
    def competing_by_interval(self) -> tuple[tuple[int, ...], ...]:
        """``C_t`` for every interval, as tuples of competing-event ids."""
        groups = [[] for _ in range(self.num_intervals)]
        for c, t in enumerate(self.competing_interval.tolist()):
            groups[t].append(c)
        return tuple(tuple(g) for g in groups)

    @cached_property
    def schedulable(self) -> np.ndarray:
        """Events whose resource demand fits into an empty interval."""
        return self.event_resources <= self.theta + RESOURCE_TOL

    def summary(self) -> tuple[int, int, int, int]:
        return self.k, self.num_events, self.num_intervals, self.num_users

    def with_k(self, k: int) -> "ProblemInstance":
        """Copy of this instance with a different target ``k``."""
        return ProblemInstance(
            k, self.theta, self.event_location, self.event_resources,
            self.competing_interval, self.activity, self.event_interest,
            self.competing_interest, self.event_ids, self.interval_ids,
            self.competing_ids, self.user_ids, self.location_names,
        )

    # entity views, mostly for serialization and debugging

    def event(self, e: int) -> CandidateEvent:
        return CandidateEvent(e, int(self.event_location[e]), float(self.event_resources[e]))

    def competing(self, c: int) -> CompetingEvent:
        return CompetingEvent(c, int(self.competing_interval[c]))

    def interval(self, t: int) -> TimeInterval:
        return TimeInterval(t, self.competing_by_interval[t])

    def user(self, u: int) -> User:
        def sparse(col):
            nz = np.flatnonzero(col)
            return {int(i): float(col[i]) for i in nz}

        return User(u, sparse(self.event_interest[:, u]),
                    sparse(self.competing_interest[:, u]), sparse(self.activity[:, u]))


@dataclass(slots=True)
class Assignment:
    """Event ``event`` placed at interval ``interval`` with its cached gain.

    ``updated`` is true while ``score`` reflects the current contents of the
    interval.
    """

    event: int
    interval: int
    score: float = 0.0
    updated: bool = True

    def key(self):
        """Sort key shared by every solver: score desc, event asc, interval asc."""
        return (-self.score, self.event, self.interval)


def _check_ids(instance, e, t):
    if not (0 <= e < instance.num_events) or not (0 <= t < instance.num_intervals):
        raise MalformedScheduleError(f"assignment ({e}, {t}) does not resolve against the instance")


class Schedule:
    """A feasible set of assignments with per-interval bookkeeping.

    Only valid assignments can be added, so a ``Schedule`` is feasible by
    construction.  Use :func:`is_feasible` on plain ``(event, interval)`` pairs
    to test arbitrary sets.
    """

    def __init__(self, instance: ProblemInstance, pairs: Iterable[tuple[int, int]] = ()):
        self.instance = instance
        self.interval_of: dict[int, int] = {}
        self.events_at: list[list[int]] = [[] for _ in range(instance.num_intervals)]
        self.load = np.zeros(instance.num_intervals)
        self._locations: list[set[int]] = [set() for _ in range(instance.num_intervals)]
        for e, t in pairs:
            self.add(e, t)

    def __len__(self):
        return len(self.interval_of)

    def __contains__(self, event):
        return event in self.interval_of

    def __iter__(self):
        return iter(self.pairs())

    def __eq__(self, other):
        if isinstance(other, Schedule):
            return self.interval_of == other.interval_of
        return NotImplemented

    def __repr__(self):
        return f"Schedule({self.pairs()})"

    def pairs(self) -> list[tuple[int, int]]:
        """Assignments as ``(event, interval)`` pairs sorted by event."""
        return sorted(self.interval_of.items())

    def fits(self, e: int, t: int) -> bool:
        """Location and resource constraints of ``t`` still hold with ``e`` added."""
        inst = self.instance
        return (int(inst.event_location[e]) not in self._locations[t]
                and self.load[t] + inst.event_resources[e] <= inst.theta + RESOURCE_TOL)

    def is_valid(self, e: int, t: int) -> bool:
        return e not in self.interval_of and self.fits(e, t)

    def add(self, e: int, t: int) -> None:
        _check_ids(self.instance, e, t)
        if not self.is_valid(e, t):
            raise InvalidAssignmentError(f"assignment of event {e} to interval {t} is not valid")
        self.interval_of[e] = t
        self.events_at[t].append(e)
        self.load[t] += self.instance.event_resources[e]
        self._locations[t].add(int(self.instance.event_location[e]))

    def copy(self) -> "Schedule":
        other = Schedule(self.instance)
        other.interval_of = dict(self.interval_of)
        other.events_at = [list(x) for x in self.events_at]
        other.load = self.load.copy()
        other._locations = [set(x) for x in self._locations]
        return other


def _as_pairs(schedule):
    if isinstance(schedule, Schedule):
        return schedule.pairs()
    out = []
    for item in schedule:
        if isinstance(item, Assignment):
            out.append((item.event, item.interval))
        else:
            e, t = item
            out.append((int(e), int(t)))
    return out


def is_feasible(schedule, instance: ProblemInstance) -> bool:
    """Check the location and resources constraints from scratch.

    ``schedule`` may be a :class:`Schedule` or any iterable of
    ``(event, interval)`` pairs / :class:`Assignment` objects.  Returns False
    if an event appears more than once.
    """
    pairs = _as_pairs(schedule)
    for e, t in pairs:
        _check_ids(instance, e, t)
    events = [e for e, _ in pairs]
    if len(set(events)) != len(events):
        return False
    by_interval: dict[int, list[int]] = {}
    for e, t in pairs:
        by_interval.setdefault(t, []).append(e)
    for evs in by_interval.values():
        locs = [int(instance.event_location[e]) for e in evs]
        if len(set(locs)) != len(locs):
            return False
        if sum(float(instance.event_resources[e]) for e in evs) > instance.theta + RESOURCE_TOL:
            return False
    return True


def is_valid(assignment, schedule: Schedule, instance: ProblemInstance) -> bool:
    """True iff ``assignment`` is feasible for its interval and its event is unscheduled."""
    if isinstance(assignment, Assignment):
        e, t = assignment.event, assignment.interval
    else:
        e, t = assignment
    _check_ids(instance, e, t)
    if schedule.instance is not instance:
        for pe, pt in schedule.pairs():
            _check_ids(instance, pe, pt)
    return schedule.is_valid(e, t)
