"""Exceptions shared across the package."""


class LieTriplesError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(LieTriplesError):
    pass


class DegenerateForm(LieTriplesError):
    pass


class InvalidParameter(LieTriplesError):
    pass


class NotClosed(LieTriplesError):
    """A candidate span is not closed under the ambient bracket."""


class ActionMissing(LieTriplesError):
    pass


class NotNested(LieTriplesError):
    pass


class NotSubalgebra(LieTriplesError):
    pass


class NotStrict(LieTriplesError):
    """Nested triple with equal dimensions somewhere."""


class NotInP(LieTriplesError):
    """Vector expected to lie in the horizontal complement p does not."""


class ZeroSlope(LieTriplesError):
    pass


class SlopeNotAllowed(LieTriplesError):
    pass


class EmbeddingNotCommuting(LieTriplesError):
    pass


class UnknownEntry(LieTriplesError):
    pass


class SpecParse(LieTriplesError):
    """Malformed inline triple specification."""
