"""Exception hierarchy shared by all hopflike modules."""


class HopflikeError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidPartsError(HopflikeError):
    """A composition was built from a negative entry."""


class SumMismatchError(HopflikeError):
    """Two compositions that must share a sum do not."""


class IndexRangeError(HopflikeError):
    """A face/degeneracy or generator index is out of range."""


class GeneratorDomainError(HopflikeError):
    """A generator is not admissible on the given composition."""


class ChainError(HopflikeError):
    """A morphism word violates the chain condition."""

    def __init__(self, message, step_index=None):
        super().__init__(message)
        self.step_index = step_index


class WordSyntaxError(HopflikeError):
    """Syntax error in the word / element grammar, with position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class BasisMismatchError(HopflikeError):
    """An operation received an element in the wrong basis."""


class DegreeMismatchError(HopflikeError):
    """Two homogeneous elements of different degree were combined."""


class RealizationError(HopflikeError):
    """An element's shape does not match the map being applied."""


class UsageError(HopflikeError):
    """Bad arguments to a sweep or CLI entry point."""
