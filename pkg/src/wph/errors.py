"""Exception hierarchy shared by the whole package."""


class WphError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(WphError):
    """Malformed or out-of-contract input."""


class DimensionError(ValidationError):
    """Operation applied to an object of the wrong dimension or shape."""


class MissingJordanEntryError(ValidationError):
    """A weak Jordan constant was requested for a size the table does not cover."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            f"no weak Jordan constant available for GL_{n}; "
            f"supply one via a table file (entries for 3 <= N <= 70 are user-provided)"
        )


class MissingWitnessError(ValidationError):
    """A support lacks the per-variable monomial shape a computation requires."""

    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(
            f"support contains no monomial of shape x_{variable}^k or "
            f"x_{variable}^k * x_j for variable {variable}"
        )


class InfiniteGroupError(ValidationError):
    """A bound was requested for a family whose linear automorphism group is infinite."""


class ResourceCapError(WphError):
    """A configurable resource cap was exceeded before the computation finished."""


class InvariantViolationError(WphError):
    """An internal consistency check failed; this indicates a bug, not bad input."""
