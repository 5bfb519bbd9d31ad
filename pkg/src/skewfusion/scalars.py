"""Exact rational scalars.

All arithmetic in this package is exact.  Rationals are gmpy2.mpq values
(arbitrary precision, always reduced, denominator positive); fractions.Fraction
is used as a fallback when gmpy2 is unavailable.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


def rat(p, q=1) -> Rat:
    """Exact rational p/q."""
    return Rat(p, q)


def rat_from_str(s: str) -> Rat:
    """Parse 'p/q' or plain integer string."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Rat(int(p), int(q))
    return Rat(int(s))


def rat_to_str(r) -> str:
    """Serialize as 'p/q', omitting '/q' when the denominator is 1."""
    r = Rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)
