"""Exception hierarchy.

All library errors derive from :class:`MixnormError` so callers can catch
library failures without masking programming errors.
"""


class MixnormError(Exception):
    """Base class for all mixnorm errors."""


class NonHermitianInput(MixnormError):
    """A matrix required to be Hermitian fails the symmetry tolerance."""


class ConvergenceFailure(MixnormError):
    """An eigen/singular-value routine did not converge."""


class DomainError(MixnormError):
    """A scalar function is undefined (or non-finite) at a required point."""


class DimensionMismatch(MixnormError):
    """Operands do not share compatible dimensions."""


class EmptySubspace(MixnormError):
    """An operation requires a nontrivial subspace but received dimension 0."""


class InvalidWeights(MixnormError):
    """Weight pairs must be non-negative and not both zero; some operations
    additionally need both weights strictly positive."""


class InvalidParams(MixnormError):
    """Conjugate-exponent/power parameters violate their constraints."""


class InvalidSpec(MixnormError):
    """A generator specification is malformed."""


class UnsupportedDimension(MixnormError):
    """The brute-force oracle only supports 2x2 and 3x3 matrices."""


class HypothesisViolated(MixnormError):
    """Inputs fail a structural hypothesis (commutation, isometry, ...)
    required by the requested bound."""


class PostCheckViolation(MixnormError):
    """A computed value failed its built-in consistency check."""


class ParseError(MixnormError):
    """Matrix input file is malformed."""


class DimensionError(MixnormError):
    """Matrix input declares an unusable dimension."""
