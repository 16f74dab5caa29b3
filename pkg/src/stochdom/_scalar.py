"""Exact rational scalar backend.

Every quantity in this package is an arbitrary-precision rational and
every operation on it is exact; binary floating point never enters a
computation path (floats appear only as the +/-inf domain sentinels,
which are compared against but never combined arithmetically).

gmpy2's ``mpq`` is used when available because it is several times
faster than ``fractions.Fraction``; the stdlib type is a drop-in
fallback.  Both keep canonical form automatically: positive denominator,
gcd-reduced.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from typing import Union

try:  # pragma: no cover - exercised implicitly by the whole suite
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction

RatLike = Union[int, str, Fraction, "Rat"]

ZERO = Rat(0)
ONE = Rat(1)


def rat(value: RatLike = 0, denominator: int | None = None) -> Rat:
    """Build an exact rational from an int, a ``p/q`` or decimal string,
    a Fraction, or a (numerator, denominator) pair."""
    if denominator is not None:
        return Rat(value, denominator)
    if isinstance(value, str):
        # Both backends accept "p/q" and plain integers; route decimal
        # literals like "4.1" through Fraction so they parse exactly.
        if "." in value or "e" in value or "E" in value:
            f = Fraction(value)
            return Rat(f.numerator, f.denominator)
        return Rat(value)
    return Rat(value)


def as_int_pair(q) -> tuple[int, int]:
    """Return (numerator, denominator) as plain Python ints."""
    return int(q.numerator), int(q.denominator)


def rat_str(q) -> str:
    """Canonical wire form ``p/q`` (denominator always written)."""
    n, d = as_int_pair(q)
    return f"{n}/{d}"


def parse_rational(text: str) -> Rat:
    """Parse a ``p/q`` or exact decimal literal; raises ValueError."""
    return rat(text.strip())


def decimal_str(q, significant: int = 12) -> str:
    """Display-only decimal rendering at the given significant digits.

    Uses the decimal module, not binary floats, so the rendering is a
    correctly rounded decimal of the exact value.
    """
    n, d = as_int_pair(q)
    with decimal.localcontext() as ctx:
        ctx.prec = significant
        val = decimal.Decimal(n) / decimal.Decimal(d)
    return str(val)


def rat_floor(q) -> int:
    n, d = as_int_pair(q)
    return n // d
