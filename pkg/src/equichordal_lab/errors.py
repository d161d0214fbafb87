"""Exception hierarchy shared by every module of the laboratory.

Module Information:
    - Filename: errors.py
    - Module: errors
    - Location: src/equichordal_lab/

Key Concepts:
    - One root class, ``EquichordalError``, so the command line can catch everything it owns
    - Usage-level errors also derive from ``ValueError``; algebraic failures from ``ArithmeticError``
    - The command line maps usage and map-domain errors to exit code 2, the rest to 1
"""


class EquichordalError(Exception):
    """Base class for all errors raised by equichordal_lab."""


# ---------------------------------------------------------------------
# USAGE
# ---------------------------------------------------------------------


class UsageError(EquichordalError, ValueError):
    """Invalid arguments or flags supplied by the caller."""


class OrderMismatchError(UsageError):
    """Two truncated series with different orders were combined."""


class ParameterError(UsageError):
    """The parameter c is outside (0, 1), or equal to 1/2 where hyperbolicity is required."""


# ---------------------------------------------------------------------
# EXACT ALGEBRA
# ---------------------------------------------------------------------


class AlgebraError(EquichordalError, ArithmeticError):
    """Base class for failures of exact arithmetic."""


class SingularSeriesError(AlgebraError):
    """A series with zero constant term has no reciprocal."""


class BranchError(AlgebraError):
    """The supplied square-root branch does not square to the constant term."""


class CompositionDomainError(AlgebraError):
    """Composition requires an inner series with zero constant term."""


class PoleError(AlgebraError, ZeroDivisionError):
    """A denominator vanished identically (or at the evaluation point)."""


class SingularityError(AlgebraError):
    """A closed-form expression hit its singular set (e.g. c**2 == y**2 for the multiplier)."""


# ---------------------------------------------------------------------
# SOLVING AND VERIFICATION
# ---------------------------------------------------------------------


class SolverDegeneracyError(EquichordalError):
    """The linear equation for a Taylor coefficient is degenerate at some order."""

    def __init__(self, order: int, detail: str = "") -> None:
        """Record the offending order alongside the message."""
        self.order = order
        message = f"degenerate linear equation for the coefficient of order {order}"
        super().__init__(f"{message}: {detail}" if detail else message)


class VerificationError(EquichordalError):
    """A computed result failed one of its exact self-checks."""


class InternalConsistencyError(VerificationError):
    """Two independent computations of the same fact disagreed."""


# ---------------------------------------------------------------------
# DYNAMICS
# ---------------------------------------------------------------------


class MapDomainError(EquichordalError, ValueError):
    """A point lies outside the domain of the planar map."""


class PunctureError(MapDomainError):
    """The point coincides with the puncture S."""


class OutsideDiskError(MapDomainError):
    """The point is at distance >= 1 from S."""


class AxisRangeError(MapDomainError):
    """An axis point violates |y| < min(c, 1 - c)."""


class FiberSearchError(EquichordalError):
    """Bisection for a fiber point could not bracket or keep a monotone bracket."""

    def __init__(self, message: str, *, diverged: bool = False) -> None:
        """Flag whether the failure came from an iterate leaving the trust region."""
        self.diverged = diverged
        super().__init__(message)


__all__ = [
    "AlgebraError",
    "AxisRangeError",
    "BranchError",
    "CompositionDomainError",
    "EquichordalError",
    "FiberSearchError",
    "InternalConsistencyError",
    "MapDomainError",
    "OrderMismatchError",
    "ParameterError",
    "PoleError",
    "PunctureError",
    "OutsideDiskError",
    "SingularSeriesError",
    "SingularityError",
    "SolverDegeneracyError",
    "UsageError",
    "VerificationError",
]
