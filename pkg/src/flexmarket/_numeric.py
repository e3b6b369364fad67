"""Exact rational arithmetic helpers.

All money (EUR/MWh, EUR/h) and power (MW) quantities are carried as
`fractions.Fraction` so that intermediate results stay unrounded; rounding
happens only at the reporting boundary, half away from zero.
"""

from __future__ import annotations

from fractions import Fraction


def frac(value: int | float | str | Fraction) -> Fraction:
    """Coerce a numeric input to an exact Fraction.

    Floats are converted through their decimal repr, so a JSON value like
    0.12 becomes 3/25 exactly rather than the binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a numeric value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a number")


def round_half_away(x: Fraction, ndigits: int = 0) -> Fraction:
    """Round to `ndigits` decimal places, ties going away from zero."""
    scale = 10**ndigits
    q = Fraction(x) * scale
    n, d = q.numerator, q.denominator
    sign = -1 if n < 0 else 1
    return Fraction(sign * ((2 * abs(n) + d) // (2 * d)), scale)


def to_number(x: Fraction) -> int | float:
    """Render a Fraction as an int when integral, else a float."""
    if x.denominator == 1:
        return int(x)
    return float(x)
