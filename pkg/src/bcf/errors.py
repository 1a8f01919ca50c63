"""Exception types raised by the bcf package."""


class BcfError(Exception):
    """Base class for all bcf-specific errors."""


class ReduciblePolynomial(BcfError):
    """A polynomial that must be irreducible over the rationals is not."""


class RootCountNotOne(BcfError):
    """An interval that must isolate exactly one real root does not."""


class DegreeOutOfRange(BcfError):
    """A polynomial degree falls outside the supported range."""


class FieldMismatch(BcfError):
    """Two algebraic numbers from different fields were combined."""


class NonPositiveInput(BcfError):
    """An input that must be positive (typically >= 1) is not."""


class InvalidSequence(BcfError):
    """A digit sequence pair violates a structural requirement."""


class MixedFields(BcfError):
    """Alpha and beta for an expansion live in different fields."""


class DegenerateSystem(BcfError):
    """A recovery system collapsed and no cubic can be extracted."""


class SingularRFactor(BcfError):
    """A digit matrix failed to invert.

    Cannot occur (every digit matrix has determinant 1); retained so the
    recovery contract names the impossibility explicitly.
    """


class PrecisionExhausted(BcfError):
    """A heuristic floating-point mode could not certify a digit decision."""


class ParseError(BcfError, ValueError):
    """A textual literal could not be parsed."""


class IndexOutOfRange(BcfError, IndexError):
    """A sequence index lies outside the available digit range."""
