from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Any, Dict

import mpmath

from p1series.exact.weighted_polynomial import WEIGHTS, WeightedPolynomial, g2, g3, lam


@dataclass(frozen=True)
class ParameterTriple:
    """
    A point (g2, lambda, g3) of parameter space.

    Entries are all Fractions (exact), all mpmath numbers (numeric) or the three
    generators of the polynomial ring (symbolic).
    """
    g2: Any
    lam: Any
    g3: Any

    def __post_init__(self):
        values = (self.g2, self.lam, self.g3)
        if all(isinstance(v, WeightedPolynomial) for v in values):
            return
        if all(isinstance(v, Rational) for v in values):
            for name, value in zip(("g2", "lam", "g3"), values):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def symbolic(cls) -> 'ParameterTriple':
        return cls(g2(), lam(), g3())

    @classmethod
    def pentagonal(cls) -> 'ParameterTriple':
        return cls(Fraction(0), Fraction(1), Fraction(0))

    @classmethod
    def equianharmonic(cls) -> 'ParameterTriple':
        return cls(Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def lemniscatic(cls) -> 'ParameterTriple':
        return cls(Fraction(4), Fraction(0), Fraction(0))

    @classmethod
    def from_strings(cls, g2_text: str, lam_text: str, g3_text: str) -> 'ParameterTriple':
        from p1series.cli.parser import parse_rational

        return cls(parse_rational(g2_text), parse_rational(lam_text), parse_rational(g3_text))

    def values(self):
        return self.g2, self.lam, self.g3

    def is_symbolic(self) -> bool:
        return isinstance(self.g2, WeightedPolynomial)

    def is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values())

    def to_mp(self) -> 'ParameterTriple':
        from p1series.exact.precision import to_mp

        return ParameterTriple(*(to_mp(v) for v in self.values()))

    def symmetry_order(self) -> int:
        """
        Stride of the support of the Laurent coefficients.

        The gcd of the weights of the nonzero parameters: 5 for lambda alone, 4 for g2
        alone, 6 for g3 alone, 2 for g2 and g3 with lambda = 0, otherwise 1. Returns 0 when
        all parameters vanish; symbolic points return 1.
        """
        if self.is_symbolic():
            return 1
        active = [w for w, v in zip(WEIGHTS, self.values()) if v != 0]
        return reduce(gcd, active, 0)

    def as_strings(self) -> Dict[str, str]:
        return {"g2": _exact_text(self.g2), "lambda": _exact_text(self.lam), "g3": _exact_text(self.g3)}

    def __str__(self):
        strings = self.as_strings()
        return f"(g2={strings['g2']}, lambda={strings['lambda']}, g3={strings['g3']})"


def _exact_text(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(value, mpmath.mp.dps)
    return str(value)
