"""Exception types raised across the package.

Everything derives from ValueError except the budget guard, which signals
an aborted computation rather than bad data.
"""

from __future__ import annotations


class SizeMismatch(ValueError):
    """Domain or codomain sizes do not line up for the requested operation."""


class NotConvertible(ValueError):
    """A conversion witness was requested for a pair that admits none."""


class ResourceBudgetExceeded(RuntimeError):
    """Enumerating the extremal operations would exceed the configured cap."""


class ZeroMarginal(ValueError):
    """A posterior was requested for an output that never occurs."""


class MalformedWeight(ValueError):
    """A probability in a resource file is not an exact fraction string."""


class NonNormalized(ValueError):
    """The weights of a parsed resource do not sum to exactly one."""


class DuplicateName(ValueError):
    """Two resources in the same input share a name."""


class TableOutOfRange(ValueError):
    """An output table entry falls outside the declared codomain."""
