"""Exception hierarchy shared across the package."""


class RingCodesError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(RingCodesError, ValueError):
    """A constructor or operation received an out-of-domain argument."""


class RingMismatchError(RingCodesError, ValueError):
    """Operands belong to different rings."""


class ShapeError(RingCodesError, ValueError):
    """Matrix or vector dimensions do not fit the requested operation."""


class NotInvertibleError(RingCodesError, ArithmeticError):
    """The element or matrix has no inverse in its ring."""


class BudgetExceededError(RingCodesError, RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class UndefinedDistanceError(RingCodesError, ValueError):
    """Minimum distance was requested for a code with no nonzero word."""


class NotApplicableError(RingCodesError, ValueError):
    """A theorem-backed operation was invoked outside its hypotheses."""


class HypothesisViolationError(RingCodesError, ValueError):
    """A certified constructor's precondition failed.

    ``hypothesis`` names the precondition that does not hold, so callers
    can report exactly which assumption broke.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(detail or hypothesis)


class InconsistentInputError(RingCodesError, ValueError):
    """Two caller-supplied views of the same object disagree."""


class CertificateError(RingCodesError, RuntimeError):
    """A recomputed certificate does not match its expected form."""


class NotationError(RingCodesError, ValueError):
    """A textual description failed to parse.

    Carries the 1-based line and column of the offending character.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
