"""Exception types shared across the package."""


class TraceCodeError(Exception):
    """Base class for all package errors."""


class ParameterError(TraceCodeError, ValueError):
    """Invalid input parameters (non-prime p, zero where nonzero required, ...)."""


class HypothesisError(ParameterError):
    """A closed form was requested outside the hypotheses it is valid for."""


class BudgetExceeded(TraceCodeError):
    """An exhaustive computation would exceed the configured work budget."""


class ConsistencyError(TraceCodeError):
    """An internal cross-check failed; results cannot be trusted."""
