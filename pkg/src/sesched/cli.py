"""``sesched`` command line: solve, gen, verify, sweep.

Exit codes: 0 ok, 1 a verification check failed, 2 usage or parse error,
3 unknown solver, 4 infeasible instance.
"""
from __future__ import annotations

import argparse
import csv
import logging
import sys
import warnings

from . import io
from .datagen import ACTIVITY_DISTS, INTEREST_DISTS, GenParams, generate
from .errors import InfeasibleInstanceError, InstanceFormatError, ParameterError
from .metrics import CSV_FIELDS
from .solvers import SOLVERS, UnknownSolverError, solve, solver_name
from .sweep import SweepConfig, run_sweep, write_csv
from .verify import FAULTS, run_verification

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_SOLVER, EXIT_INFEASIBLE = 0, 1, 2, 3, 4

log = logging.getLogger("sesched")


def _fail(msg, code):
    print(f"sesched: error: {msg}", file=sys.stderr)
    return code


def cmd_solve(args) -> int:
    try:
        instance = io.read_instance(args.instance)
    except (OSError, InstanceFormatError) as exc:
        return _fail(f"{args.instance}: {exc}", EXIT_USAGE)
    try:
        name = solver_name(args.solver)
    except UnknownSolverError as exc:
        return _fail(exc, EXIT_SOLVER)
    try:
        schedule, report = solve(instance, name, seed=args.seed)
    except InfeasibleInstanceError as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    w = csv.DictWriter(sys.stdout, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerow(report.as_row())
    if args.schedule_out:
        io.write_schedule(schedule, instance, args.schedule_out)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GenParams(
        k=args.k, num_events=args.events, num_intervals=args.intervals,
        num_users=args.users, num_locations=args.locations, theta=args.theta,
        xi_range=tuple(args.xi_range) if args.xi_range else None,
        competing_range=tuple(args.competing_range),
        interest_dist=args.interest_dist, zipf_exponent=args.zipf_exponent,
        activity_dist=args.activity_dist, seed=args.seed,
    )
    try:
        instance = generate(params)
    except ParameterError as exc:
        return _fail(exc, EXIT_USAGE)
    io.write_instance(instance, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 0:
        return _fail("--trials must be non-negative", EXIT_USAGE)
    result = run_verification(
        args.trials, args.seed, fault=args.inject_fault,
        max_events=args.max_events, max_intervals=args.max_intervals,
        max_k=args.max_k, max_users=args.max_users,
    )
    print(result.summary())
    return EXIT_OK if result.ok else EXIT_CHECK


def cmd_sweep(args) -> int:
    try:
        config = SweepConfig.load(args.config)
        rows = run_sweep(config, threads=args.threads)
    except UnknownSolverError as exc:
        return _fail(exc, EXIT_SOLVER)
    except ParameterError as exc:
        return _fail(exc, EXIT_USAGE)
    except InfeasibleInstanceError as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    write_csv(rows, args.out if args.out else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sesched", description="Social event scheduling solvers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance file and print a CSV report")
    s.add_argument("instance")
    s.add_argument("solver", help=f"one of {', '.join(SOLVERS)} (case-insensitive)")
    s.add_argument("--seed", type=int, default=None, help="RAND seed (default 0)")
    s.add_argument("--schedule-out", metavar="PATH", help="write the schedule as CSV")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate a synthetic instance file")
    d = GenParams()
    g.add_argument("-o", "--out", required=True)
    g.add_argument("--k", type=int, default=d.k)
    g.add_argument("--events", "--num-events", type=int, default=None, help="default 2k")
    g.add_argument("--intervals", "--num-intervals", type=int, default=None, help="default 3k/2")
    g.add_argument("--users", "--num-users", type=int, default=d.num_users)
    g.add_argument("--locations", "--num-locations", type=int, default=d.num_locations)
    g.add_argument("--theta", type=float, default=d.theta)
    g.add_argument("--xi-range", type=float, nargs=2, metavar=("LO", "HI"),
                   help="default 1 to theta/3")
    g.add_argument("--competing-range", type=int, nargs=2, metavar=("LO", "HI"),
                   default=list(d.competing_range))
    g.add_argument("--interest-dist", choices=INTEREST_DISTS, default=d.interest_dist)
    g.add_argument("--zipf-exponent", type=float, default=d.zipf_exponent)
    g.add_argument("--activity-dist", choices=ACTIVITY_DISTS, default=d.activity_dist)
    g.add_argument("--seed", type=int, default=d.seed)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run the randomized self-check suite")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-events", type=int, default=60)
    v.add_argument("--max-intervals", type=int, default=30)
    v.add_argument("--max-k", type=int, default=40)
    v.add_argument("--max-users", type=int, default=60)
    v.add_argument("--inject-fault", choices=FAULTS, default=None,
                   help="deliberately break a solver to show the suite notices")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", help="run a parameter sweep described by a JSON config")
    w.add_argument("config")
    w.add_argument("-o", "--out", help="CSV output path (default stdout)")
    w.add_argument("--threads", type=int, default=None, help="overrides SES_THREADS")
    w.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    logging.basicConfig(format="sesched: %(levelname)s: %(message)s", level=logging.WARNING)
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
