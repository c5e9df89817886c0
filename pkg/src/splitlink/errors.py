"""Exception hierarchy shared by every module."""


class SplitLinkError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(SplitLinkError, ValueError):
    pass


class ZeroVector(SplitLinkError, ValueError):
    pass


class DimensionMismatch(SplitLinkError, ValueError):
    pass


class QubitOutOfRange(SplitLinkError, IndexError):
    pass


class NonOrthonormalBasis(SplitLinkError, ValueError):
    pass


class InvalidPartition(SplitLinkError, ValueError):
    pass


class UnknownComponent(SplitLinkError, KeyError):
    pass


class WrongArity(SplitLinkError, ValueError):
    pass


class InvalidMapping(SplitLinkError, ValueError):
    pass


class ParseError(SplitLinkError, ValueError):
    pass


class SchemaError(SplitLinkError, ValueError):
    pass
