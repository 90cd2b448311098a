# coding: utf-8
"""
Description:
    Exception hierarchy of the package. Every error raised on purpose inherits from MatchingError,
    so callers (and the CLI) can tell validation problems apart from genuine bugs.
Classes:
    MatchingError: Root of the hierarchy
    ConfigError: A configuration value is invalid
    InstanceError: The instance (or an argument referring to it) is invalid
    InvalidMatchingError: The matching is not a valid matching of the instance
    InfeasibleInstanceError: No matching saturates the critical vertices
    GenerationError: The random generator could not build a feasible instance
    ReductionError: Misuse of the G'/G'' reductions
    LevelingError: A level assignment could not be computed
    PartitionError: The partition method or a transformation failed
    OracleCapError: The brute-force oracle refused an instance that is too large
    InternalVerificationError: A self-check failed (bug guard)
"""


# --------------------------------------------------------------------------------
# > Base
# --------------------------------------------------------------------------------
class MatchingError(Exception):
    """Root class for every error raised by the package"""


class ConfigError(MatchingError, ValueError):
    """A configuration value (usually a CPM_* environment variable) cannot be used"""


# --------------------------------------------------------------------------------
# > Instances and matchings
# --------------------------------------------------------------------------------
class InstanceError(MatchingError, ValueError):
    """The instance or one of its vertices/edges is invalid"""


class ParseError(InstanceError):
    """The instance or matching text is malformed"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateVertexError(InstanceError):
    pass


class NonMutualAdjacencyError(InstanceError):
    pass


class RepeatedPreferenceError(InstanceError):
    pass


class CriticalSideError(InstanceError):
    pass


class UnknownVertexError(InstanceError):
    pass


class NotNeighborError(InstanceError):
    pass


class UnknownEdgeError(InstanceError):
    pass


class InvalidMatchingError(MatchingError, ValueError):
    """A vertex is used twice, an edge is missing from E, or an edge is unexpectedly matched"""


class InfeasibleInstanceError(MatchingError):
    """No matching of the instance saturates its critical set"""


class GenerationError(MatchingError):
    """The generator exhausted its retries without producing a feasible instance"""

    def __init__(self, message, seed=None):
        self.seed = seed
        super().__init__(message)


# --------------------------------------------------------------------------------
# > Reductions
# --------------------------------------------------------------------------------
class ReductionError(MatchingError):
    pass


class NotStableError(ReductionError):
    """The reduced matching has a blocking pair"""

    def __init__(self, message, pairs=()):
        self.pairs = list(pairs)
        super().__init__(message)


class MultipleActiveCopiesError(ReductionError):
    pass


class LevelRangeError(ReductionError):
    pass


class LevelMismatchError(ReductionError):
    pass


# --------------------------------------------------------------------------------
# > Leveling
# --------------------------------------------------------------------------------
class LevelingError(MatchingError):
    """Base class for leveling failures, which always name the offending edge when there is one"""

    def __init__(self, message, edge=None):
        self.edge = edge
        super().__init__(message)


class UnmatchedPromotionError(LevelingError):
    pass


class LevelBoundError(LevelingError):
    pass


class CertificateRejectedError(LevelingError):
    pass


# --------------------------------------------------------------------------------
# > Partition and transformations
# --------------------------------------------------------------------------------
class PartitionError(MatchingError):
    pass


class NoSrapError(PartitionError):
    pass


class NoSiapError(PartitionError):
    pass


class PartitionConflictError(PartitionError):
    pass


class TransformError(PartitionError):
    pass


# --------------------------------------------------------------------------------
# > Oracle and self-checks
# --------------------------------------------------------------------------------
class OracleCapError(MatchingError):
    pass


class InternalVerificationError(MatchingError):
    """Raised when a result fails its own verification. Should never happen."""
