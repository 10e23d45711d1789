"""Exact formal power series and the generating functions they verify"""

from .generating_functions import (
    Family,
    allowed_parts_series,
    as_family,
    gf_coefficients,
    gf_from_parts,
    total_series,
    total_series_unsimplified,
)
from .power_series import PowerSeries, divide, exp, expand_rational, log, log_recurrence, multiply

__all__ = [
    "Family",
    "PowerSeries",
    "allowed_parts_series",
    "as_family",
    "divide",
    "exp",
    "expand_rational",
    "gf_coefficients",
    "gf_from_parts",
    "log",
    "log_recurrence",
    "multiply",
    "total_series",
    "total_series_unsimplified",
]
