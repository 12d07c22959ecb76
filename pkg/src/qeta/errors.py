"""Exception types shared across the package."""


class QetaError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnitError(QetaError):
    """Series inversion needs a constant term of 1 or -1 to stay over the integers."""


class OutOfRangeError(QetaError):
    """A coefficient beyond the truncation order was requested.

    Coefficients past the order are unknown, not zero; silently
    reporting 0 is the classic truncation bug this error prevents.
    """


class NegativeValuationError(QetaError):
    """A division would produce negative powers of q."""


class NonExactDivisionError(QetaError):
    """A division cannot be carried out exactly over the integers."""


class DomainError(QetaError):
    """A structurally valid input has a meaningless argument (e.g. extract with j >= m)."""


class ExprSyntaxError(QetaError):
    """Malformed expression text.

    Attributes:
        offset: character offset of the offending position.
        expected: description of what the parser was looking for.
    """

    def __init__(self, message: str, offset: int, expected: str | None = None):
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class NotPrimeError(QetaError):
    """A parameter that must be prime is not."""


class CorpusError(QetaError):
    """Malformed corpus file.

    Attributes:
        line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
