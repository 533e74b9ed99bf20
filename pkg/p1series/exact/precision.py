"""Multiprecision plumbing: working precision with guard digits and exact-to-float conversion."""
from contextlib import contextmanager
from fractions import Fraction
from numbers import Rational

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.keys.series_properties import SeriesProperties as SP


def guard_digits() -> int:
    return ConfigurationsManager().get_int_for_key(SP.GUARD_DIGITS, 10)


@contextmanager
def working_precision(digits: int, extra: int = 0):
    """Run the block at ``digits`` plus the configured guard digits plus ``extra``."""
    with mpmath.workdps(int(digits) + guard_digits() + int(extra)):
        yield


def to_mp(value):
    """Convert once, at the current precision; Fractions are divided at full precision."""
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return +value
    if isinstance(value, Rational):
        value = Fraction(value)
        return mpmath.mpf(value.numerator) / value.denominator
    if isinstance(value, complex):
        return mpmath.mpc(value)
    return mpmath.mpmathify(value)


def mp_string(value, digits: int) -> str:
    """Fixed-point text with ``digits`` significant digits, never in exponent form."""
    return mpmath.nstr(value, digits, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def agreeing_digits(a, b) -> float:
    """Number of leading decimal digits on which ``a`` and ``b`` agree, relative to |a|."""
    difference = abs(a - b)
    if difference == 0:
        return float(mpmath.mp.dps)
    scale = abs(a) if a != 0 else mpmath.mpf(1)
    return float(-mpmath.log10(difference / scale))


def decimal_string(value, decimals: int) -> str:
    """Real value rounded half-even to ``decimals`` places, as plain positional text."""
    scaled = int(mpmath.nint(mpmath.mpf(value) * mpmath.mpf(10) ** decimals))
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + text
    return f"{sign}{text[:-decimals]}.{text[-decimals:]}"
