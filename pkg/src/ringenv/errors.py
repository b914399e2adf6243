"""Exception hierarchy shared by every backend."""


class RingError(Exception):
    """Base class for all ringenv errors."""


class SizeLimit(RingError):
    pass


class ResourceLimit(RingError):
    pass


class ZeroRing(RingError):
    pass


class NotPrime(RingError):
    pass


class NotLocal(RingError):
    pass


class InvalidAction(RingError):
    pass


class InvalidRing(RingError):
    pass


class UnitIdeal(RingError):
    pass


class NotZeroDimensional(RingError):
    pass


class TooFewVariables(RingError):
    pass


class ClassMismatch(RingError):
    pass


class UnsupportedSubmodule(RingError):
    pass


class UnsupportedBase(RingError):
    pass


class IncompatibleCommand(RingError):
    pass


class ParseError(RingError):
    def __init__(self, line, col, expected, text=None):
        self.line = line
        self.col = col
        self.expected = expected
        msg = f"line {line}, column {col}: expected {expected}"
        if text is not None:
            msg += f" (found {text!r})"
        super().__init__(msg)
