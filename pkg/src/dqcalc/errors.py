"""Exceptions raised by dqcalc."""


class DQCalcError(Exception):
    """Base class for all dqcalc errors."""


class DomainError(DQCalcError, ValueError):
    """The complexified argument lies outside the function's domain."""


class SingularInput(DQCalcError, ValueError):
    """The operation is undefined at this input (for example A = 0)."""


class InvalidParameter(DQCalcError, ValueError):
    pass


class NonCommuting(DQCalcError, ValueError):
    pass


class ShapeMismatch(DQCalcError, ValueError):
    pass


class NotAnticommuting(DQCalcError, ValueError):
    pass
