"""Exception types shared across the package."""


class SpinSphereError(Exception):
    """Base class for all package-specific errors."""


class NotDominant(SpinSphereError):
    """Weight fails the dominance conditions of its group."""


class DimensionMismatch(SpinSphereError):
    """A mandatory dimension-sum identity failed; the selection rule is wrong."""


class OutOfRange(SpinSphereError):
    """Parameter outside the valid range of the operation."""


class PoleArgument(SpinSphereError):
    """A Gamma-ratio factor hit a pole; telescoping is invalid for this weight."""


class NonIntegerMultiplicity(SpinSphereError):
    """A closed-form multiplicity did not evaluate to a positive integer."""


class AnnihilationFailure(SpinSphereError):
    """Matrix is not annihilated by the predicted characteristic factors."""


class DegenerateCasimir(SpinSphereError):
    """Predicted Casimir eigenvalues collide; projectors cannot separate them."""


class CapExceeded(SpinSphereError):
    """Requested dimension exceeds the configured construction cap."""
