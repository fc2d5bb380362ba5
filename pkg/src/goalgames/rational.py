"""Exact rational parsing and display helpers.

All quantities in this package are `fractions.Fraction` values; nothing in
the analysis path ever touches floating point.  Rational strings accept an
optional sign followed by either a decimal numeral (read as an exact
base-10 value) or "p/q" with q > 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

_DECIMAL_RE = re.compile(r"[+-]?(\d+(\.\d+)?|\.\d+)")
_RATIO_RE = re.compile(r"([+-]?\d+)/(\d+)")


def parse_rational(text: str) -> Fraction:
    """Parse '2', '-0.75' or '1/3' into an exact Fraction."""
    s = text.strip()
    if _DECIMAL_RE.fullmatch(s):
        return Fraction(s)
    m = _RATIO_RE.fullmatch(s)
    if m:
        numerator, denominator = int(m.group(1)), int(m.group(2))
        if denominator == 0:
            raise ValueError(f"invalid rational {text!r}: denominator must be positive")
        return Fraction(numerator, denominator)
    raise ValueError(f"invalid rational {text!r}")


def format_exact(value: Fraction | None) -> str:
    """'p/q' (or plain integer) form; empty string for a missing value."""
    if value is None:
        return ""
    return str(value)


def format_display(value: Fraction | None) -> str:
    """Two-decimal display form, ties rounded away from zero.

    19/40 renders as '0.48', -19/40 as '-0.48'.  Missing values render as
    the empty string so CSV cells stay blank.
    """
    if value is None:
        return ""
    sign = "-" if value < 0 else ""
    hundredths = abs(value) * 100
    whole = hundredths.numerator // hundredths.denominator
    if hundredths - whole >= Fraction(1, 2):
        whole += 1
    return f"{sign}{whole // 100}.{whole % 100:02d}"
