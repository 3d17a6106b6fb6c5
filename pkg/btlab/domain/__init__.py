"""
Domain layer: immutable entities, abstract experiment interface and the error hierarchy.
"""

from .errors import InvalidParameterError, InvariantViolation, NumericalResidueError, WorkbenchError

__all__ = [
    'InvalidParameterError',
    'InvariantViolation',
    'NumericalResidueError',
    'WorkbenchError',
]
