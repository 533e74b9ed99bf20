from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.params import ParameterTriple

EQUIANHARMONIC = "equianharmonic"
LEMNISCATIC = "lemniscatic"
CUSTOM = "custom"


@dataclass(frozen=True)
class EllipticCase:
    """
    A lambda = 0 solution, i.e. a Weierstrass function with invariants (g2, g3).

    ``symmetry`` is the order of the rotation group of the period lattice acting on the
    Laurent coefficients: 6 for the hexagonal lattice, 4 for the square one, 2 otherwise.
    """
    kind: str
    g2: Fraction
    g3: Fraction

    @classmethod
    def equianharmonic(cls) -> 'EllipticCase':
        return cls(EQUIANHARMONIC, Fraction(0), Fraction(1))

    @classmethod
    def lemniscatic(cls) -> 'EllipticCase':
        return cls(LEMNISCATIC, Fraction(4), Fraction(0))

    @classmethod
    def custom(cls, g2, g3) -> 'EllipticCase':
        if g2 ** 3 == 27 * g3 ** 2:
            raise SeriesDomainError("degenerate invariants: the cubic has a repeated root",
                                    details={"g2": str(g2), "g3": str(g3)})
        return cls(CUSTOM, Fraction(g2), Fraction(g3))

    @classmethod
    def named(cls, kind: str) -> 'EllipticCase':
        if kind == EQUIANHARMONIC:
            return cls.equianharmonic()
        if kind == LEMNISCATIC:
            return cls.lemniscatic()
        raise SeriesDomainError(f"unknown elliptic case '{kind}'", details={"known": [EQUIANHARMONIC, LEMNISCATIC]})

    @property
    def params(self) -> ParameterTriple:
        return ParameterTriple(self.g2, Fraction(0), self.g3)

    @property
    def symmetry(self) -> int:
        return self.params.symmetry_order()

    @property
    def tau_modular(self) -> Any:
        """omega2 / omega1 for the two named cases."""
        if self.kind == EQUIANHARMONIC:
            return mpmath.expjpi(mpmath.mpf(1) / 3)
        if self.kind == LEMNISCATIC:
            return mpmath.mpc(0, 1)
        raise SeriesDomainError("the modular parameter is only tabulated for the named cases")
