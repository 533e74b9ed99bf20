"""Scalar helpers shared by the recursions; scalars are Fractions, WeightedPolynomials or mpmath numbers."""
from fractions import Fraction


def divide(value, divisor):
    """Exact quotient for integer and Fraction input, ordinary division otherwise."""
    if isinstance(value, int):
        return Fraction(value, divisor) if isinstance(divisor, int) else Fraction(value) / divisor
    return value / divisor


def is_zero(value) -> bool:
    return value == 0
