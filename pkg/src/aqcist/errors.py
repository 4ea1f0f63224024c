"""Exception types shared across the package."""

from __future__ import annotations


class AqcistError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(AqcistError, ValueError):
    """A vertex value is outside [0, 2**n) for the stated dimension."""


class NotAdjacentError(AqcistError, ValueError):
    """Edge classification was requested for a non-adjacent vertex pair."""


class UnsupportedDimensionError(AqcistError, ValueError):
    """The dimension is outside the range an operation supports."""


class TreeStructureError(AqcistError, ValueError):
    """An edge list does not form a spanning tree of the augmented cube.

    ``kind`` is one of ``non-aq-edge``, ``duplicate-edge``, ``disconnected``,
    ``cyclic``, ``degenerate``; ``witness`` is the offending edge or vertex.
    """

    def __init__(self, kind: str, witness, message: str):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class MalformedFamilyError(AqcistError, ValueError):
    """A family's raw data cannot be interpreted (parse-level problem)."""


class BruteForceLimitError(AqcistError, ValueError):
    """Brute-force verification refused because n exceeds the pair-enumeration cap."""


class VerificationFailedError(AqcistError, RuntimeError):
    """An operation requiring a verified family was given one that fails."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ModeDisagreementError(AqcistError, RuntimeError):
    """The two verification modes returned different verdicts (internal bug)."""
