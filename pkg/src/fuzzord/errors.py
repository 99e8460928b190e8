"""Exception hierarchy.

Every error class carries a stable machine-readable ``code`` used by the
CLI's JSON mode, so callers can dispatch on failures without parsing
messages.
"""


class FuzzOrdError(Exception):
    """Base class for all library errors."""

    code = "Error"


class InvalidCarrier(FuzzOrdError):
    """Carrier is malformed: duplicate labels, unknown elements, over the size cap."""

    code = "InvalidCarrier"


class EmptyQuery(FuzzOrdError):
    """An operation that needs a nonempty set was handed an empty one."""

    code = "EmptyQuery"


class BrokenOrder(FuzzOrdError):
    """Two distinct supremum/infimum candidates passed the full scan.

    This can only happen when the membership matrix is not a valid fuzzy
    order; it is surfaced rather than silently picking a candidate.
    """

    code = "BrokenOrder"


class InvalidOrder(FuzzOrdError):
    """The membership matrix failed axiom validation."""

    code = "InvalidOrder"


class DimensionError(FuzzOrdError):
    code = "DimensionError"


class NotDominated(FuzzOrdError):
    """Decomposition precondition failed: |x| is not below the target sum."""

    code = "NotDominated"


class NotPositive(FuzzOrdError):
    code = "NotPositive"


class DegenerateBasis(FuzzOrdError):
    code = "DegenerateBasis"


class StabilizationOverflow(FuzzOrdError):
    """A meet-iteration failed to settle within its precomputed bound.

    Unreachable for the preset families; raising it signals a bug, not bad
    input.
    """

    code = "StabilizationOverflow"


class NotProjectionBand(FuzzOrdError):
    code = "NotProjectionBand"


class NotPositiveOperator(FuzzOrdError):
    code = "NotPositiveOperator"


class NotMonotone(FuzzOrdError):
    code = "NotMonotone"

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SpecError(FuzzOrdError):
    """Malformed sequence/family specification in the convergence module."""

    code = "SpecError"
