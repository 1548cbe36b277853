"""Arbitrary-precision rationals.

``Rat`` is ``gmpy2.mpq`` when gmpy2 is importable and ``fractions.Fraction``
otherwise; both keep numerator and denominator coprime with a positive
denominator.
"""
from fractions import Fraction

try:  # pragma: no cover - depends on the environment
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction

RAT_TYPES = (int, Fraction, type(Rat(0)))

ZERO = Rat(0)
ONE = Rat(1)


def as_rat(value):
    """Coerce ints, Fractions, ``"p/q"`` strings and Rats to ``Rat``."""
    if isinstance(value, str):
        text = value.strip()
        try:
            return Rat(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            from ..errors import InputError

            raise InputError(f"not a rational number: {value!r}") from exc
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return Rat(value.numerator, value.denominator)
    return Rat(value)


def is_rat(value):
    return isinstance(value, RAT_TYPES) and not isinstance(value, bool)


def rat_str(q):
    q = as_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
