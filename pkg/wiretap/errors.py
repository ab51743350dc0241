"""
Exceptions and Warnings
=======================
Error types raised across the package.

Every exception derives from a built-in base as well, so callers that only
catch ``ValueError`` or ``ArithmeticError`` keep working.
"""


class WiretapError(Exception):
    """Base class for all package errors."""


class ConfigurationError(WiretapError, ValueError):
    """Invalid scenario, plan or run configuration."""


class MissingThreshold(ConfigurationError):
    """An outage estimate was requested without an outage rate."""


class DomainError(WiretapError, ValueError):
    """Argument outside the mathematical domain of a function."""


class IndexOutOfRange(WiretapError, IndexError):
    """Selection index does not address a column of the channel."""


class NumericalError(WiretapError, ArithmeticError):
    """Base class for failures of a numerical procedure."""


class NoSignChange(NumericalError):
    """Root bracket endpoints have the same sign."""


class NoConvergence(NumericalError):
    """Iterative solver hit its iteration cap."""


class NumericalFailure(NumericalError):
    """A factorization reported a non-positive pivot."""


class NegativeVariance(NumericalError):
    """A variance expression evaluated clearly below zero."""


class DegenerateVariance(NumericalError):
    """A Gaussian measure was requested with zero variance."""


class UnsupportedRegimeWarning(UserWarning):
    """Configuration lies outside the regimes the approximation covers."""


class DegenerateVarianceWarning(RuntimeWarning):
    """A zero variance forced the step-function fallback."""
