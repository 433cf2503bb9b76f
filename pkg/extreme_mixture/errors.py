"""
Exceptions raised across the package.

Inconsistency of a problem is reported as a value (INCONSISTENT), never raised.
"""


class ExtremeMixtureError(Exception):
    """Base class for every error raised by extreme_mixture."""


class InputError(ExtremeMixtureError, ValueError):
    """Malformed input: bad dimensions, unknown ids, weight sums, size limits."""


class MembershipError(InputError):
    """A point was required to lie in a convex hull and does not."""


class PreconditionError(ExtremeMixtureError):
    """An operation was called outside the situation it is defined for."""


class CertificateStall(ExtremeMixtureError):
    """No supporting normal could advance the hyperplane sequence."""


class NoLiftFound(ExtremeMixtureError):
    """No atom realizes the requested performance vector."""


class InvariantViolation(ExtremeMixtureError, AssertionError):
    """A property guaranteed by the existence argument failed at run time."""
