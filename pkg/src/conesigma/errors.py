"""Exception hierarchy shared by all conesigma modules."""


class ConeSigmaError(Exception):
    """Base class for every error raised by this package."""


class CoefficientMismatch(ConeSigmaError, ValueError):
    """Two operands live over different coefficient structures."""


class DimensionMismatch(ConeSigmaError, ValueError):
    pass


class PreconditionError(ConeSigmaError, ValueError):
    pass


class CertificateRequired(ConeSigmaError):
    """An operation needs a finite-support certificate the input does not carry."""


class WitnessVerificationError(ConeSigmaError):
    """A constructed witness failed its own check.

    This only happens when a lazily defined matrix violates its declared
    row/column supports.
    """


class BudgetExceeded(ConeSigmaError):
    pass


class UnverifiedComplex(ConeSigmaError, ValueError):
    pass


class DSLError(ConeSigmaError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class DSLSyntaxError(DSLError):
    pass


class UnknownIdentifier(DSLError):
    pass
