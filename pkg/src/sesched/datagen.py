"""Seeded synthetic instances over a grid of sizes and interest distributions."""
from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ParameterError
from .model import RESOURCE_TOL, ProblemInstance

INTEREST_DISTS = ("uniform", "normal", "zipf")
ACTIVITY_DISTS = ("uniform", "normal")
ZIPF_CLASSES = 100
LOCATION_RETRIES = 5


@dataclass(frozen=True)
class GenParams:
    """Generator parameters.

    ``num_events`` defaults to 2k and ``num_intervals`` to 3k/2.  ``xi_range``
    defaults to ``(1, theta / 3)``.  ``competing_range`` bounds the number of
    competing events per interval (inclusive integers).
    """

    k: int = 100
    num_events: int | None = None
    num_intervals: int | None = None
    num_users: int = 50_000
    num_locations: int = 25
    theta: float = 20.0
    xi_range: tuple[float, float] | None = None
    competing_range: tuple[int, int] = (1, 16)
    interest_dist: str = "uniform"
    zipf_exponent: float = 2.0
    activity_dist: str = "uniform"
    seed: int = 0

    @property
    def events(self) -> int:
        return 2 * self.k if self.num_events is None else self.num_events

    @property
    def intervals(self) -> int:
        return max(1, 3 * self.k // 2) if self.num_intervals is None else self.num_intervals

    @property
    def xi_bounds(self) -> tuple[float, float]:
        return (1.0, self.theta / 3) if self.xi_range is None else tuple(map(float, self.xi_range))

    def resolved(self) -> dict:
        """All parameters with the size defaults filled in."""
        d = asdict(self)
        d.update(num_events=self.events, num_intervals=self.intervals, xi_range=self.xi_bounds)
        return d

    def validate(self) -> None:
        if self.k < 1:
            raise ParameterError("k must be at least 1")
        if self.events < self.k:
            raise ParameterError(f"k={self.k} exceeds the number of events ({self.events})")
        if self.intervals < 1 or self.num_users < 1:
            raise ParameterError("need at least one interval and one user")
        if self.num_locations < 1:
            raise ParameterError("need at least one location")
        if not self.theta > 0:
            raise ParameterError("theta must be positive")
        lo, hi = self.xi_bounds
        if lo < 0 or lo > hi:
            raise ParameterError(f"bad resource range {self.xi_bounds}")
        clo, chi = self.competing_range
        if int(clo) != clo or int(chi) != chi or clo < 0 or clo > chi:
            raise ParameterError(f"bad competing range {self.competing_range}")
        if self.interest_dist not in INTEREST_DISTS:
            raise ParameterError(f"interest_dist must be one of {INTEREST_DISTS}")
        if self.activity_dist not in ACTIVITY_DISTS:
            raise ParameterError(f"activity_dist must be one of {ACTIVITY_DISTS}")
        if self.interest_dist == "zipf" and not self.zipf_exponent > 0:
            raise ParameterError("zipf_exponent must be positive")


def _draw(rng, dist, shape, zipf_exponent=2.0):
    if dist == "uniform":
        return rng.random(shape)
    if dist == "normal":
        return np.clip(rng.normal(0.5, 0.25, shape), 0.0, 1.0)
    ranks = np.arange(1, ZIPF_CLASSES + 1)
    p = ranks ** -float(zipf_exponent)
    r = rng.choice(ranks, size=shape, p=p / p.sum())
    return 1.0 - (r - 1) / ZIPF_CLASSES


def first_fit_count(location, resources, num_intervals, theta, k) -> int:
    """Events placed by first-fit (stopping at ``k``), a cheap feasibility witness."""
    used = [set() for _ in range(num_intervals)]
    load = np.zeros(num_intervals)
    placed = 0
    for loc, xi in zip(location.tolist(), resources.tolist()):
        for t in range(num_intervals):
            if loc not in used[t] and load[t] + xi <= theta + RESOURCE_TOL:
                used[t].add(loc)
                load[t] += xi
                placed += 1
                break
        if placed == k:
            break
    return placed


def generate(params: GenParams) -> ProblemInstance:
    """Build an instance from ``params``; the same params give the same instance."""
    params.validate()
    rng = np.random.default_rng(params.seed)
    n_e, n_t, n_u = params.events, params.intervals, params.num_users
    lo, hi = params.xi_bounds

    location = rng.integers(params.num_locations, size=n_e)
    resources = rng.uniform(lo, hi, n_e)
    for attempt in range(LOCATION_RETRIES + 1):
        if first_fit_count(location, resources, n_t, params.theta, params.k) >= params.k:
            break
        if attempt == LOCATION_RETRIES:
            raise ParameterError(
                f"could not generate {params.k} feasible assignments; "
                "add intervals or locations, or raise theta"
            )
        warnings.warn("too few feasible assignments; redrawing event locations", stacklevel=2)
        location = rng.integers(params.num_locations, size=n_e)

    clo, chi = params.competing_range
    counts = rng.integers(int(clo), int(chi) + 1, size=n_t)
    competing_interval = np.repeat(np.arange(n_t), counts)

    activity = _draw(rng, params.activity_dist, (n_t, n_u))
    event_interest = _draw(rng, params.interest_dist, (n_e, n_u), params.zipf_exponent)
    competing_interest = _draw(rng, params.interest_dist, (len(competing_interval), n_u),
                               params.zipf_exponent)

    return ProblemInstance(
        k=params.k,
        theta=params.theta,
        event_location=location,
        event_resources=resources,
        competing_interval=competing_interval,
        activity=activity,
        event_interest=event_interest,
        competing_interest=competing_interest,
    )
