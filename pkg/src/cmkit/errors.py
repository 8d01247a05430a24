"""Exception types shared across the package."""


class CmkitError(Exception):
    """Base class for all package errors."""


class DomainError(CmkitError, ValueError):
    """An argument lies outside the mathematical domain of an operation.

    The message names the violated precondition.
    """


class ConvergenceError(CmkitError, ArithmeticError):
    """A series or quadrature failed to reach the requested tolerance."""


class AsymptoticUnreliableError(ConvergenceError):
    """The asymptotic regime cannot deliver the requested tolerance at this x."""


class PreconditionError(CmkitError, ValueError):
    """A structural hypothesis (lengths, ordering, majorization) failed.

    The message states which hypothesis was violated.
    """


class CombinatorialBlowupError(CmkitError, OverflowError):
    """A derivative expansion would require too many terms."""
