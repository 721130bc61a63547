"""Exception types shared across the package."""


class SkeletonError(ValueError):
    """Invalid skeleton construction (index out of range, duplicate edge, bad text)."""


class DomainError(ValueError):
    """A parameter or precondition lies outside the admissible domain."""


class UndefinedDistributionError(DomainError):
    """The flesh is undefined because the skeleton has no edges."""


class IntegrityError(RuntimeError):
    """An incrementally maintained state diverged from a full recomputation."""


class BudgetError(ValueError):
    """An enumeration request exceeds the exhaustive-enumeration budget."""
