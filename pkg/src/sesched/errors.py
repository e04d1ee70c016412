"""Exception hierarchy shared by every part of the package."""


class SESError(Exception):
    """Base class for all errors raised by :mod:`sesched`."""


class MalformedScheduleError(SESError):
    """A schedule refers to events or intervals the instance does not have."""


class InvalidAssignmentError(SESError):
    """An assignment was applied although it is not valid for the schedule."""


class InfeasibleInstanceError(SESError):
    """A solver could not place ``k`` events.

    ``placed`` is the number of assignments made before the solver ran out of
    valid candidates.
    """

    def __init__(self, k, placed, solver=None):
        self.k = k
        self.placed = placed
        self.solver = solver
        who = f"{solver}: " if solver else ""
        super().__init__(
            f"{who}only {placed} of k={k} events could be validly assigned "
            f"(shortfall {k - placed})"
        )


class ParameterError(SESError, ValueError):
    """Inconsistent generator, sweep or instance parameters."""


class OracleSizeError(SESError):
    """The instance is too large for exhaustive enumeration."""


class InstanceFormatError(SESError):
    """An instance file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
