class HitTransferError(Exception):
    """
    Base class of every error raised by the hit-problem and transfer computations
    """


class DimensionError(HitTransferError, ValueError):
    """
    Raised on a length, variable-count or degree mismatch between two operands
    """


class OrderUndefinedError(HitTransferError, ValueError):
    """
    Raised when two monomials of different degree or variable count are compared
    """


class NoSpikeError(HitTransferError, ValueError):
    """
    Raised when a minimal spike is requested in a degree that needs more variables than available
    """


class ParityError(HitTransferError, ValueError):
    """
    Raised when a Kameko map is applied in a degree n with n - h odd
    """


class VariableIndexError(HitTransferError, IndexError):
    """
    Raised when a substitution is requested with a variable index out of range
    """


class CapacityError(HitTransferError, RuntimeError):
    """
    Raised when a computation would exceed the configured column threshold

    :param estimate: the estimated number of columns of the computation
    :param threshold: the configured threshold
    """

    def __init__(self, estimate, threshold, what="computation"):
        self.estimate = estimate
        self.threshold = threshold
        super().__init__("The {} needs about {} columns, over the capacity threshold of {}; "
                         "pass --force to run it anyway".format(what, estimate, threshold))


class DomainError(HitTransferError, ValueError):
    """
    Raised when an element outside the domain of an operation is supplied (e.g. a non-annihilated dual)
    """


class InvariantViolation(HitTransferError, RuntimeError):
    """
    Raised when a mathematical invariant fails at runtime, which signals a bug rather than bad input
    """


class CacheError(HitTransferError, RuntimeError):
    """
    Raised when a cache entry fails its checksum or schema check
    """


class ManifestError(HitTransferError, ValueError):
    """
    Raised when a claim manifest is malformed or names an unknown claim kind
    """
