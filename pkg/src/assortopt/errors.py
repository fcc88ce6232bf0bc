"""Exception types shared across the package.

The CLI maps these onto exit codes: ValidationError -> 1 (bad input),
PreconditionError -> 2 (a solver refused to run because its hypotheses
could not be verified).
"""


class AssortOptError(Exception):
    """Base class for all package errors."""


class ValidationError(AssortOptError):
    """Malformed input: bad instance file, inconsistent dimensions, bad flags."""


class PreconditionError(AssortOptError):
    """A solver's hypotheses do not hold (or could not be verified)."""


class DensityUndefinedError(PreconditionError):
    """The distribution has no density at a requested point (atoms, kinks)."""


class NoFiniteReserveError(PreconditionError):
    """The revenue curve is unbounded; no finite reserve exists."""


class InternalInvariantError(AssortOptError):
    """A structural invariant of an algorithm was violated (a bug, not bad input)."""
