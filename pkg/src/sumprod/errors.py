from abc import ABC
from collections.abc import Sequence
from typing import Any


class UserError(ABC, Exception):
    """Base class for user-facing errors.

    All errors that inherit from UserError have their messages shown
    to the user by the CLI, and each subclass maps to a stable exit code.
    """


class ValidationError(UserError):
    """Raised when user input is malformed (rational text, integer-only arguments)."""


class PreconditionError(UserError):
    """Raised when an operation's precondition does not hold for its input."""


class NotPairwiseDistinctError(PreconditionError):
    """Raised when a triple has repeated entries."""

    def __init__(self, message: str = "Entries must be pairwise distinct") -> None:
        super().__init__(message)


class ZeroProductError(PreconditionError):
    """Raised when the product abc is zero where a nonzero product is required."""

    def __init__(self, message: str = "Product of the entries must be nonzero") -> None:
        super().__init__(message)


class SingularCurveError(PreconditionError):
    """Raised when (a+b+c)^3 = 27abc, so the attached cubic has genus zero."""

    def __init__(self, message: str = "Curve is singular: s^3 = 27p") -> None:
        super().__init__(message)


class NotPositiveError(PreconditionError):
    """Raised when a positivity search is started from a triple with a nonpositive entry."""


class NotOnCurveError(PreconditionError):
    """Raised when a point does not satisfy the curve equation."""


class NotASolutionError(PreconditionError):
    """Raised when a triple does not solve the system it is claimed to solve."""


class ExcludedParameterError(PreconditionError):
    """Raised when a family parameter takes an excluded value."""


class NotInFamilyError(PreconditionError):
    """Raised when a triple is not covered by the parametrization being inverted."""


class ExceptionalPointError(PreconditionError):
    """Raised when a curve point has no preimage under the triple-to-point correspondence."""


class ConditionViolationError(PreconditionError):
    """Raised when a non-degeneracy condition fails for some permutation of a triple."""

    def __init__(self, condition: str, permutations: Sequence[Any]) -> None:
        self.condition = condition
        self.permutations = list(permutations)
        shown = ", ".join(str(p) for p in self.permutations)
        super().__init__(f"Condition ({condition}) fails for permutation(s): {shown}")


class CapExhaustedError(UserError):
    """Raised when a positivity search examines its whole cap before emitting enough records."""

    def __init__(self, emitted: int, requested: int | None, cap: int) -> None:
        self.emitted = emitted
        self.requested = requested
        self.cap = cap
        wanted = "unlimited" if requested is None else str(requested)
        super().__init__(f"Search cap of {cap} group elements exhausted after {emitted} of {wanted} records")
