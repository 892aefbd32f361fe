"""Exception types shared across the engine.

Raising (rather than returning sentinel values) is reserved for conditions the
caller genuinely has to handle: partial operators applied outside their
domain, non-invertible series, refused non-terminating expansions, and numeric
preconditions.
"""

from __future__ import annotations


class QhahnError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(QhahnError):
    """Exact polynomial division failed; carries the nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotInvertible(QhahnError):
    """Series has no constant-term unit, so no multiplicative inverse."""


class NonTerminating(QhahnError):
    """No truncation bound exists; refusing to emit a wrongly-truncated sum."""


class DenominatorPole(QhahnError):
    """A lower Pochhammer parameter hit zero at a reached summation index."""


class MissingAssignment(QhahnError):
    """Polynomial evaluation lacked a value for an occurring variable."""


class DomainError(QhahnError):
    """Inputs outside the documented domain (e.g. q not in (0, 1))."""


class NonConvergent(QhahnError):
    """Numeric series failed the geometric-domination test."""


class UnknownCheck(QhahnError):
    """Requested check name is not in the registry."""
