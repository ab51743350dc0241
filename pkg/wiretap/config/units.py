"""
Unit Conversions
================
dB <-> linear power ratio. Everything inside the package is linear; these
helpers are used only where run configurations enter and leave.
"""

import math

from wiretap.errors import ConfigurationError


def db_to_linear(value_db: float) -> float:
    """Convert a power ratio in dB to a linear ratio (10^(dB/10))."""
    if not math.isfinite(value_db):
        raise ConfigurationError(f"dB value must be finite, got {value_db}")
    try:
        return 10.0 ** (value_db / 10.0)
    except OverflowError:
        raise ConfigurationError(f"dB value {value_db:g} overflows a linear ratio") from None


def linear_to_db(value: float) -> float:
    """Convert a positive linear power ratio to dB."""
    if not value > 0 or not math.isfinite(value):
        raise ConfigurationError(f"Linear ratio must be positive and finite, got {value}")
    return 10.0 * math.log10(value)
