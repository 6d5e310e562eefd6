"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live in different ambient dimensions."""


class GroupMismatchError(ValueError):
    """Group elements from different groups were combined."""


class ValidationError(ValueError):
    """A constructor invariant was violated (grading, associativity, Jacobi, unit law)."""


class NotSemisimpleError(ValidationError):
    """Operation requires a semisimple algebra."""


class NotAnIdealError(ValueError):
    """A subspace claimed to be a two-sided ideal is not one."""


class NotGradedError(ValueError):
    """A subspace required to be graded does not equal its graded closure."""


class ResourceCapError(RuntimeError):
    """A computation was refused because it exceeds the configured resource cap."""


class SchemaError(ValueError):
    """Malformed algebra/polynomial description; message carries the offending position."""


class InternalCheckError(RuntimeError):
    """A post-hoc verification failed; indicates a bug, carries a witness when available."""
