"""Backend selection for the simplex pivot kernel and the rational type.

The compiled Cython kernel is preferred when present; UEQC_PURE=1 forces the
pure-Python twin.  Tableau arithmetic runs on gmpy2.mpq when available
(exact, ~10x faster than Fraction); UEQC_RATIONAL=fraction opts out.  Public
results are always plain fractions.Fraction.
"""

import os
from fractions import Fraction

from . import _simplex_py

if os.environ.get("UEQC_PURE"):
    _impl = _simplex_py
else:
    try:
        from . import _simplex_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _simplex_py

BACKEND = _impl.BACKEND
pivot = _impl.pivot
bland_entering = _impl.bland_entering
ratio_leaving = _impl.ratio_leaving

if os.environ.get("UEQC_RATIONAL", "").lower() == "fraction":
    RAT = Fraction
    RATIONAL_BACKEND = "fraction"
else:
    try:
        from gmpy2 import mpq as RAT  # type: ignore[assignment]

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:
        RAT = Fraction
        RATIONAL_BACKEND = "fraction"


def kernel_backends():
    """(pivot kernel, rational type) actually in use."""
    return BACKEND, RATIONAL_BACKEND
