"""Exception types shared across the package.

Every condition a caller might want to catch by name gets its own class;
all of them derive from :class:`SuccessionError` so ``except SuccessionError``
catches any model-level failure without touching programming errors.
"""

from __future__ import annotations

__all__ = [
    "SuccessionError",
    "ZeroEvidenceProbability",
    "UGFalsified",
    "NoContinuousComponent",
    "DimensionMismatch",
    "InvalidRule",
    "SampleTooLarge",
    "TableTooLarge",
]


class SuccessionError(Exception):
    """Base class for every model-level error raised by this package."""


class ZeroEvidenceProbability(SuccessionError):
    """The prior assigns probability exactly zero to the observed evidence.

    Conditioning is undefined in that case; callers asked for a posterior
    or a predictive probability that does not exist.
    """


class UGFalsified(SuccessionError):
    """A universal generalization was assumed alive but the evidence contains
    a counterexample (at least one disconfirming instance)."""


class NoContinuousComponent(SuccessionError):
    """The prior places no mass on the continuous (beta) component, so there
    are no posterior shape parameters to report."""


class DimensionMismatch(SuccessionError, ValueError):
    """Two vectors or laws that must share a shape do not."""


class InvalidRule(SuccessionError):
    """A predictive rule returned something that is not a probability
    vector of the expected length (entries must be nonnegative rationals
    summing to exactly one)."""


class SampleTooLarge(SuccessionError, ValueError):
    """More draws were requested from an urn than it holds."""


class TableTooLarge(SuccessionError):
    """A dense sequence-law table would exceed the configured size cap."""
