"""Exact rational plumbing: coercion and the "p/q" wire format.

Everything in this package computes over ``fractions.Fraction``; floats are
rejected at the boundary so no rounding can sneak in.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def frac(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"exact rational required, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise ParseError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Fraction) -> str:
    """Render as "p/q", or just "p" for integers."""
    q = frac(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
