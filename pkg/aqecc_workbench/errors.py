"""
Exception hierarchy for the workbench.

Validation failures subclass ValueError so callers can keep catching the
builtin; outcome-style failures (budget, undefined distance, hypothesis
gates) derive from WorkbenchError only.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench."""


class FieldError(WorkbenchError, ValueError):
    """Invalid field, tower or basis."""


class CodeMismatchError(WorkbenchError, ValueError):
    """Codes combined over different fields or lengths, or a bad coordinate."""


class NotNestedError(WorkbenchError, ValueError):
    """A pair of codes that is not strictly nested."""


class NotSelfOrthogonalError(WorkbenchError, ValueError):
    """An additive code that is not contained in its trace-symplectic dual."""


class InvalidParameterError(WorkbenchError, ValueError):
    """Family parameters outside their valid range."""


class UndefinedDistanceError(WorkbenchError):
    """A minimum weight over an empty set of words."""


class BudgetExceededError(WorkbenchError):
    """An enumeration or field construction larger than the configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} but the budget is {budget}")


class HypothesisFailedError(WorkbenchError):
    """A theorem hypothesis that does not hold for the given inputs."""

    def __init__(self, tag: str, reason: str):
        self.tag = tag
        self.reason = reason
        super().__init__(f"{tag}: {reason}")
