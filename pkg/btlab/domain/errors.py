class WorkbenchError(Exception):
    """Base class for every error raised by btlab"""


class InvalidParameterError(WorkbenchError, ValueError):
    """A precondition of an operation is not met"""


class NumericalResidueError(WorkbenchError, ArithmeticError):
    """A floating-point transform left a residue above tolerance on an exact-real quantity"""


class InvariantViolation(WorkbenchError, AssertionError):
    """An unconditional inequality or exact identity failed at run time"""
