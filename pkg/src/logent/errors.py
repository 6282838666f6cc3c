"""Exception hierarchy shared by all modules."""


class LogentError(Exception):
    """Base class for every error raised by this package."""


class InvariantViolation(LogentError, ValueError):
    """An input value breaks a domain invariant (probabilities, labels, ...)."""


class PartitionError(InvariantViolation):
    """Raw blocks do not form a partition."""


class OverlapError(PartitionError):
    pass


class CoverageError(PartitionError):
    pass


class EmptyBlockError(PartitionError):
    pass


class UniverseMismatch(LogentError, ValueError):
    """Operands live on different universes."""


class SizeMismatch(LogentError, ValueError):
    pass


class CapExceeded(LogentError, ValueError):
    """A desk-scale size limit was exceeded."""


class BudgetExceeded(CapExceeded):
    pass


class ParseError(LogentError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnboundVariable(LogentError, KeyError):
    pass


class EmptyAxisSet(LogentError, ValueError):
    pass


class OverlappingAxisSets(LogentError, ValueError):
    pass


class AxisMismatch(LogentError, ValueError):
    pass


class AsymmetricDistance(LogentError, ValueError):
    pass


class NonzeroDiagonal(LogentError, ValueError):
    pass


class UnsupportedKind(LogentError, ValueError):
    pass


class AlreadyBitKind(LogentError, ValueError):
    pass


class ZeroProbability(LogentError, ValueError):
    pass


class NotPowerOfTwo(LogentError, ValueError):
    pass


class OracleMismatch(LogentError, AssertionError):
    """A closed form disagreed with its brute-force oracle (checked mode only)."""


class SchemaError(LogentError, ValueError):
    pass


class InputIOError(LogentError, OSError):
    pass
