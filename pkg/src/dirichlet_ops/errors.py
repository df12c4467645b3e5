"""Shared exception types.

DomainError marks inputs outside an operation's documented domain (bad
indices, nonzero constant term where one is forbidden, non-monotone
weights).  SpectralError marks attempts to invert at or too close to a
spectrum point; it carries the offending classification when available.
"""

from __future__ import annotations

__all__ = ["DomainError", "SpectralError"]


class DomainError(ValueError):
    """Input violates a documented precondition."""


class SpectralError(RuntimeError):
    """Operation requested at a point of the spectrum."""

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification
