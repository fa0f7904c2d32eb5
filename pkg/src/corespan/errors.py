"""Exception hierarchy shared by every corespan module."""


class CorespanError(ValueError):
    """Base class; every precondition failure in the library derives from it."""


class NotWeaklyDecreasing(CorespanError):
    pass


class NonPositivePart(CorespanError):
    pass


class CellOutsideDiagram(CorespanError):
    pass


class NonzeroCharge(CorespanError):
    pass


class HookNotEqualC(CorespanError):
    pass


class NotACore(CorespanError):
    pass


class NuNotInKc(CorespanError):
    pass


class WindowTooSmall(CorespanError):
    pass


class WindowNotCanonical(CorespanError):
    pass


class SlopeMismatch(CorespanError):
    pass


class NoSouthArrival(CorespanError):
    pass


class NotSpanning(CorespanError):
    pass


class NotRealizable(CorespanError):
    pass


class VertexAbsent(CorespanError, KeyError):
    pass


class DomainMismatch(CorespanError):
    pass


class ZeroQExponent(CorespanError):
    pass


class PreconditionViolated(CorespanError):
    pass
