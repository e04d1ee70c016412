"""Randomized self-checks: solver equivalence, counter dominance, gain
monotonicity, telescoping of gains, and the gap to the exact optimum."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .datagen import INTEREST_DISTS, GenParams, first_fit_count, generate
from .errors import SESError
from .model import ProblemInstance
from .scoring import ScoreEngine, total_utility
from .solvers import solve_alg, solve_exact, solve_hor, solve_hor_i, solve_inc, solve_rand, solve_top

log = logging.getLogger(__name__)

FAULTS = ("inc-tiebreak",)
GREEDY = ("ALG", "INC", "HOR", "HOR-I")
REL_TOL = 1e-6


def _close(a, b, rel=REL_TOL):
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


def with_clones(instance: ProblemInstance, rng, count: int) -> ProblemInstance:
    """Overwrite ``count`` random events with copies of other events.

    Clones have identical gains everywhere, which exercises the tie-break.
    """
    n_e = instance.num_events
    if n_e < 2 or count < 1:
        return instance
    loc = instance.event_location.copy()
    res = instance.event_resources.copy()
    mu = instance.event_interest.copy()
    for _ in range(count):
        src, dst = rng.choice(n_e, size=2, replace=False)
        loc[dst], res[dst], mu[dst] = loc[src], res[src], mu[src]
    return ProblemInstance(instance.k, instance.theta, loc, res, instance.competing_interval,
                           instance.activity, mu, instance.competing_interest)


def random_instance(rng, *, max_events=60, max_intervals=30, max_k=40, max_users=60,
                    dist=None, clone_prob=0.5) -> ProblemInstance:
    """Small random instance whose k is comfortably placeable.

    Half of the draws aim for k at most the number of intervals and half for
    more, so both regimes of the horizontal solvers get exercised.
    """
    n_t = int(rng.integers(2, max_intervals + 1))
    n_e = int(rng.integers(4, max_events + 1))
    params = GenParams(
        k=1, num_events=n_e, num_intervals=n_t,
        num_users=int(rng.integers(5, max_users + 1)),
        num_locations=int(rng.integers(3, 15)),
        competing_range=(1, int(rng.integers(1, 6))),
        interest_dist=dist or INTEREST_DISTS[int(rng.integers(len(INTEREST_DISTS)))],
        zipf_exponent=float(rng.choice([1.0, 2.0, 3.0])),
        activity_dist=("uniform", "normal")[int(rng.integers(2))],
        seed=int(rng.integers(2**32)),
    )
    inst = generate(params)
    if rng.random() < clone_prob:
        inst = with_clones(inst, rng, int(rng.integers(1, 4)))
    capacity = first_fit_count(inst.event_location, inst.event_resources, n_t, inst.theta, n_e)
    cap = max(1, min(max_k, capacity // 2))
    if rng.random() < 0.5 or cap <= n_t:
        k = int(rng.integers(1, min(cap, n_t) + 1))
    else:
        k = int(rng.integers(n_t + 1, cap + 1))
    return inst.with_k(k)


def corpus(trials: int, seed: int = 0, **sizes):
    """Deterministic stream of ``trials`` random instances cycling over interest distributions."""
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        yield random_instance(rng, dist=INTEREST_DISTS[i % len(INTEREST_DISTS)], **sizes)


def run_all(instance: ProblemInstance, *, seed: int = 0, fault: str | None = None) -> dict:
    """Solve ``instance`` with every solver; values are (schedule, report)."""
    return {
        "ALG": solve_alg(instance),
        "INC": solve_inc(instance, reverse_ties=fault == "inc-tiebreak"),
        "HOR": solve_hor(instance),
        "HOR-I": solve_hor_i(instance),
        "TOP": solve_top(instance),
        "RAND": solve_rand(instance, seed),
    }


def check_instance(instance: ProblemInstance, runs: dict) -> list[str]:
    """Every violated invariant, as readable strings (empty when all hold)."""
    bad = []
    rep = {name: r for name, (_, r) in runs.items()}
    sched = {name: s.pairs() for name, (s, _) in runs.items()}
    n_e, n_t, n_u = instance.num_events, instance.num_intervals, instance.num_users

    if sched["INC"] != sched["ALG"]:
        bad.append("INC schedule differs from ALG")
    if sched["HOR-I"] != sched["HOR"]:
        bad.append("HOR-I schedule differs from HOR")

    sc = {name: r.score_computations for name, r in rep.items()}
    if sc["INC"] > sc["ALG"]:
        bad.append(f"INC computations {sc['INC']} > ALG {sc['ALG']}")
    if sc["HOR-I"] > sc["HOR"]:
        bad.append(f"HOR-I computations {sc['HOR-I']} > HOR {sc['HOR']}")
    if any(sc["TOP"] > sc[name] for name in GREEDY):
        bad.append("TOP is not minimal among gain-based solvers")
    if rep["INC"].assignments_examined > rep["ALG"].assignments_examined:
        bad.append("INC examined more assignments than ALG")

    if instance.k <= n_t:
        full = int(instance.schedulable.sum()) * n_t * n_u
        if sc["HOR"] != full:
            bad.append(f"HOR computations {sc['HOR']} != initial scoring {full} with k <= |T|")
        if rep["ALG"].update_evaluations > 0 and not sc["HOR"] < sc["ALG"]:
            bad.append("HOR does not beat ALG although ALG updated")

    for name, (s, r) in runs.items():
        if len(s) != instance.k:
            bad.append(f"{name} placed {len(s)} events, k={instance.k}")
        scratch = total_utility(s.pairs(), instance)
        if not _close(r.utility, scratch):
            bad.append(f"{name} utility {r.utility} != recomputed {scratch}")
        if name in GREEDY and not _close(sum(r.selected_gains), scratch):
            bad.append(f"{name} gains sum {sum(r.selected_gains)} != utility {scratch}")

    if rep["HOR"].utility < 0.95 * rep["ALG"].utility:
        bad.append("HOR utility below 95% of ALG")
    return bad


def monotonicity_trials(trials: int, seed: int = 0, tol: float = 1e-9) -> list[str]:
    """Adding an event to an interval never raises another candidate's gain there."""
    bad = []
    rng = np.random.default_rng([seed, 0x5E5])
    inst = None
    for i in range(trials):
        if i % 50 == 0:
            inst = random_instance(rng, max_events=20, max_intervals=6, max_users=30, clone_prob=0.2)
            inst = ProblemInstance(inst.k, 1e9, np.arange(inst.num_events), inst.event_resources,
                                   inst.competing_interval, inst.activity, inst.event_interest,
                                   inst.competing_interest)
        engine = ScoreEngine(inst)
        t = int(rng.integers(inst.num_intervals))
        order = rng.permutation(inst.num_events)
        # a random prefix already placed at t, then one candidate and one addition
        prefix = int(rng.integers(0, inst.num_events - 1))
        for e in order[:prefix]:
            engine.apply(int(e), t)
        cand, added = int(order[prefix]), int(order[prefix + 1])
        before = engine.gain(cand, t)
        engine.apply(added, t)
        after = engine.gain(cand, t)
        if after > before + tol:
            bad.append(f"trial {i}: gain of {cand} at {t} rose {before} -> {after}")
    return bad


def oracle_trials(trials: int, seed: int = 0) -> tuple[list[str], list[float]]:
    """Compare ALG with exhaustive search on tiny instances; returns failures and ratios."""
    bad, ratios = [], []
    for i in range(trials):
        rng = np.random.default_rng([seed, i, 0x0AC])
        inst = random_instance(rng, max_events=8, max_intervals=4, max_k=4, max_users=12)
        k = min(inst.k if inst.k > 1 else int(rng.integers(1, 5)), 4, inst.num_events)
        inst = inst.with_k(k)
        try:
            _, opt = solve_exact(inst)
        except SESError:
            continue
        _, rep = solve_alg(inst)
        if rep.utility > opt + 1e-9:
            bad.append(f"oracle trial {i}: ALG {rep.utility} beats exact {opt}")
        ratios.append(rep.utility / opt if opt > 0 else 1.0)
    return bad, ratios


@dataclass
class VerifyResult:
    trials: int
    failures: list[str] = field(default_factory=list)
    hor_equal_alg: int = 0
    oracle_ratios: list[float] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"instances checked: {self.trials}",
                 f"HOR utility equal to ALG: {self.hor_equal_alg}/{self.trials}"]
        if self.oracle_ratios:
            lines.append(f"mean ALG/exact utility ratio: {np.mean(self.oracle_ratios):.4f} "
                         f"over {len(self.oracle_ratios)} tiny instances")
        lines.append(f"violations: {len(self.failures)}")
        lines.extend(f"  {f}" for f in self.failures[:20])
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def run_verification(trials: int = 200, seed: int = 0, *, fault: str | None = None,
                     monotonicity: int | None = None, oracle: int | None = None,
                     **sizes) -> VerifyResult:
    """Run the whole suite over ``trials`` random instances."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    result = VerifyResult(trials)
    if trials <= 0:
        log.warning("no trials requested; nothing was verified")
        return result
    for i, inst in enumerate(corpus(trials, seed, **sizes)):
        try:
            runs = run_all(inst, seed=seed, fault=fault)
        except SESError as exc:
            result.failures.append(f"instance {i}: {exc}")
            continue
        result.failures.extend(f"instance {i}: {msg}" for msg in check_instance(inst, runs))
        if _close(runs["HOR"][1].utility, runs["ALG"][1].utility, 1e-12):
            result.hor_equal_alg += 1
    result.failures.extend(monotonicity_trials(trials * 10 if monotonicity is None else monotonicity, seed))
    bad, ratios = oracle_trials(max(1, trials // 2) if oracle is None else oracle, seed)
    result.failures.extend(bad)
    result.oracle_ratios = ratios
    return result
