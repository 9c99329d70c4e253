"""Error classes shared across the package.

PreconditionError marks input that is well formed but outside the
mathematical domain of an operation (non-coprime pair, missing flag, ...).
ComputationError marks an internal consistency failure: an exactness
check that can only fail if the implementation is wrong.
"""


class PreconditionError(ValueError):
    """Input violates a documented mathematical precondition."""


class ComputationError(RuntimeError):
    """An exactness or consistency check failed mid-computation."""
