"""Scheduling algorithms and a name-based dispatcher."""
from __future__ import annotations

from ..errors import ParameterError
from ..metrics import SolverReport
from ..model import ProblemInstance, Schedule
from .baselines import solve_rand, solve_top
from .exact import solve_exact
from .greedy import solve_alg, solve_inc
from .horizontal import solve_hor, solve_hor_i

SOLVERS = {
    "ALG": solve_alg,
    "INC": solve_inc,
    "HOR": solve_hor,
    "HOR-I": solve_hor_i,
    "TOP": solve_top,
    "RAND": solve_rand,
}


class UnknownSolverError(ParameterError):
    pass


def solver_name(name: str) -> str:
    """Canonical solver name; accepts any case and ``_`` for ``-``."""
    canon = name.strip().upper().replace("_", "-")
    if canon == "HORI":
        canon = "HOR-I"
    if canon not in SOLVERS:
        raise UnknownSolverError(f"unknown solver {name!r}; choose from {', '.join(SOLVERS)}")
    return canon


def solve(instance: ProblemInstance, name: str, seed: int | None = None) -> tuple[Schedule, SolverReport]:
    """Run the named solver.  ``seed`` only matters for RAND (default 0)."""
    canon = solver_name(name)
    if canon == "RAND":
        return solve_rand(instance, 0 if seed is None else seed)
    return SOLVERS[canon](instance)


__all__ = [
    "SOLVERS", "UnknownSolverError", "solve", "solver_name", "solve_alg", "solve_inc",
    "solve_hor", "solve_hor_i", "solve_top", "solve_rand", "solve_exact",
]
