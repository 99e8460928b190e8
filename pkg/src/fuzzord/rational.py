"""Exact rational scalars: parsing, formatting, grade range checks.

Everything in this package computes over ``fractions.Fraction``.  Floats
are rejected at the boundary: the whole theory hinges on exact
comparisons against the 1/2 threshold, and float noise would corrupt
every predicate built on it.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Coerce an int, string ("2/3", "-5") or Fraction to a Fraction.

    Floats are deliberately not accepted.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(
        f"expected an exact rational (int, str or Fraction), got {type(value).__name__}"
    )


def format_fraction(q: Fraction) -> str:
    """Serialize a rational as "p/q" (or "p" when the denominator is 1)."""
    return str(q)


def ensure_grade(value) -> Fraction:
    """Coerce to a Fraction and require it to lie in [0, 1]."""
    q = to_fraction(value)
    if not (ZERO <= q <= ONE):
        raise ValueError(f"grade {q} outside [0, 1]")
    return q
