"""Social event scheduling: assign k candidate events to time intervals so that
expected attendance is maximal, under location and resource limits and in the
presence of competing events."""
from .datagen import GenParams, generate
from .errors import (
    InfeasibleInstanceError,
    InstanceFormatError,
    InvalidAssignmentError,
    MalformedScheduleError,
    OracleSizeError,
    ParameterError,
    SESError,
)
from .metrics import SolverReport
from .model import Assignment, ProblemInstance, Schedule, is_feasible, is_valid
from .running_example import running_example
from .scoring import ComputationCounter, ScoreEngine, total_utility
from .solvers import (
    SOLVERS,
    solve,
    solve_alg,
    solve_exact,
    solve_hor,
    solve_hor_i,
    solve_inc,
    solve_rand,
    solve_top,
)

__version__ = "0.1.0"
