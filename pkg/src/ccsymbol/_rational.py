"""Exact rational payload type: ``gmpy2.mpq`` when installed, else ``fractions.Fraction``.

Both reduce to lowest terms and compare equal (and hash equal) to each other,
so the choice only affects speed.  ``CCSYMBOL_PURE_PYTHON=1`` forces
``Fraction``.
"""

from __future__ import annotations

import os
from fractions import Fraction

QQ = Fraction
RATIONAL_BACKEND = "fractions"

if os.environ.get("CCSYMBOL_PURE_PYTHON", "") in ("", "0"):
    try:
        from gmpy2 import mpq as QQ  # noqa: F811

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:  # optional dependency
        pass

RATIONAL_TYPES = (Fraction,) if QQ is Fraction else (Fraction, QQ)
