"""Exception hierarchy shared by every module of the package."""


class QRSubsetError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(QRSubsetError, ValueError):
    """Invalid finite field parameters or malformed elements."""


class NotPrime(FieldError):
    pass


class EvenCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DivisionByZero(QRSubsetError, ZeroDivisionError):
    pass


class CapExceeded(QRSubsetError):
    """An enumeration would exceed its configured size cap."""


class BudgetExceeded(CapExceeded):
    """A brute-force oracle refused to run because the state count is too large."""


class TagMismatch(QRSubsetError, TypeError):
    """Binary operation on two quadratic-ring values with different omega^2."""


class NonIntegerResult(QRSubsetError, ArithmeticError):
    """A closed-form evaluation did not collapse to a rational integer.

    The offending ring value is kept on ``value`` for diagnostics.  Seeing
    this exception always means a bug, never bad user input.
    """

    def __init__(self, value, context=""):
        self.value = value
        self.context = context
        msg = f"non-integer result {value}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class ConsistencyError(QRSubsetError, AssertionError):
    """Two independent evaluation routes disagreed."""


class ZeroCoefficient(QRSubsetError, ValueError):
    pass


class KOutOfRange(QRSubsetError, ValueError):
    pass


class OddExtensionDegree(QRSubsetError, ValueError):
    pass
