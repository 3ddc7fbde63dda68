"""
Exception hierarchy. Every error carries the CLI exit code it maps to.
"""

from typing import Any, Optional


class ColoringLabError(Exception):
    exit_code = 4

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InputError(ColoringLabError):
    """Malformed input or violated precondition."""
    exit_code = 2


class HypothesisViolation(ColoringLabError):
    """The residue hypothesis fails; `witness` is a cycle in the forbidden class."""
    exit_code = 1


class VerificationFailure(ColoringLabError):
    """An independent checker rejected a coloring; `witness` holds the violation."""
    exit_code = 1


class ResourceLimitExceeded(ColoringLabError):
    exit_code = 3

    def __init__(self, message: str, limit: Optional[int] = None):
        super().__init__(message)
        self.limit = limit


class CycleLimitExceeded(ResourceLimitExceeded):
    pass


class EarSearchLimitExceeded(ResourceLimitExceeded):
    pass


class OracleBoundExceeded(ResourceLimitExceeded):
    pass


class DefectError(ColoringLabError):
    """A fact the constructions guarantee turned out false."""
    exit_code = 4


class InvariantBreach(DefectError):
    pass


class InvalidEarError(DefectError):
    pass
