"""Exact rational scalar used throughout the package.

All public data structures carry ``fractions.Fraction`` values.  Hot inner
loops (the simplex solver, arrangement enumeration) run on ``gmpy2.mpq``
when available, which is arithmetic-compatible with ``Fraction`` but much
faster.  Both types are always reduced and hash/compare equal, so the two
may be mixed freely.
"""

from __future__ import annotations

from fractions import Fraction

try:  # gmpy2 is optional at runtime, only a speedup
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)


def to_fraction(value) -> Fraction:
    """Normalize an exact scalar (int, Fraction, mpq) to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    # plain ints: Fraction over mpz internals confuses downstream consumers
    return Fraction(int(value.numerator), int(value.denominator))


def format_rational(value) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    return str(to_fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``; raises ValueError on malformed input.

    A zero denominator is reported as ValueError rather than
    ZeroDivisionError so callers have a single failure mode.
    """
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in rational {text!r}") from exc
