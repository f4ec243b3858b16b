"""Exact Donaldson-Thomas invariants of rank-2 sheaves on local P^2.

All rational values are returned as strings like ``-639/4``; feed them to
:class:`fractions.Fraction` for arithmetic.
"""

from lp2dt._core import (
    dt_report,
    eta_series,
    hilb_chi,
    moduli_dimension,
    series,
    table,
    verify,
)

__all__ = [
    "dt_report",
    "eta_series",
    "hilb_chi",
    "moduli_dimension",
    "series",
    "table",
    "verify",
]
