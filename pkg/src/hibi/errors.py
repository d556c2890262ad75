"""Exception hierarchy.

Everything raised on purpose derives from :class:`HibiError`.  Subclasses of
:class:`InputError` signal bad user input (CLI exit code 1); the remaining
ones signal a broken invariant inside the library (CLI exit code 2).
"""


class HibiError(Exception):
    """Base class for all library errors."""


class InputError(HibiError):
    pass


class ParseError(InputError):
    pass


class CycleDetected(InputError):
    pass


class UnknownElement(InputError):
    pass


class DuplicateElement(InputError):
    pass


class EmptyPoset(InputError):
    pass


class CapExceeded(InputError):
    pass


class NotACovering(InputError):
    pass


class NotAnIdeal(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class InvalidTree(InputError):
    pass


class OracleMismatch(HibiError):
    """Two independent computations of the same invariant disagree."""


class InternalError(HibiError):
    pass
