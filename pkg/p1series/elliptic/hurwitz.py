"""
Hurwitz numbers, the lemniscatic analogues of the Bernoulli numbers.

    H_n = (4n)! G_{4n}(i) / (4 omega_1)^(4n)

with omega_1 the real half-period of the square lattice with g2 = 4, g3 = 0. They obey

    H_n = 3 / ((2n - 3)(16n^2 - 1)) * sum_{k=1}^{n-1} (4k - 1)(4n - 4k - 1) C(4n, 4k) H_k H_{n-k}

from the seed H_1, and in terms of the Laurent coefficients H_n = (4n)! c_{4n} / ((4n - 1) 16^n).
"""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Optional

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import SeriesDomainError
from p1series.elliptic.cases import EllipticCase
from p1series.elliptic.eisenstein import eisenstein_q_oracle
from p1series.elliptic.half_period import half_period
from p1series.exact.precision import to_mp, working_precision
from p1series.exact.tables import CoefficientTable
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.laurent.recursion import LaurentExpansion, laurent_coeffs

logger = logging.getLogger(__name__)

HURWITZ = "hurwitz"


def hurwitz_seed() -> Fraction:
    return ConfigurationsManager().get_fraction_for_key(SP.HURWITZ_SEED, Fraction(1, 10))


def hurwitz_numbers(N: int, seed: Optional[Fraction] = None) -> CoefficientTable:
    """
    H_1 .. H_N exactly from the recurrence.

    Args:
        N: last index
        seed: H_1; the configured value (1/10) when omitted
    """
    if N < 1:
        raise SeriesDomainError("Hurwitz numbers start at n = 1", details={"N": N})
    H = [Fraction(0), Fraction(seed) if seed is not None else hurwitz_seed()]
    for n in range(2, N + 1):
        total = sum((4 * k - 1) * (4 * n - 4 * k - 1) * comb(4 * n, 4 * k) * H[k] * H[n - k]
                    for k in range(1, n))
        H.append(Fraction(3, (2 * n - 3) * (16 * n * n - 1)) * total)
    return CoefficientTable(tuple(H[1:]), 1, HURWITZ, N, EllipticCase.lemniscatic().params)


def hurwitz_from_laurent(n: int, expansion: Optional[LaurentExpansion] = None) -> Fraction:
    """H_n = (4n)! c_{4n} / ((4n - 1) 16^n) from the exact lemniscatic Laurent coefficient."""
    if n < 1:
        raise SeriesDomainError("Hurwitz numbers start at n = 1", details={"n": n})
    if expansion is None or expansion.N < 4 * n:
        expansion = laurent_coeffs(EllipticCase.lemniscatic().params, 4 * n)
    return Fraction(factorial(4 * n), (4 * n - 1) * 16 ** n) * expansion.c(4 * n)


def hurwitz_from_eisenstein(n: int, digits: int = 25, omega1=None):
    """(4n)! G_{4n}(i) / (4 omega_1)^(4n) with G from the q-expansion at tau = i."""
    if n < 1:
        raise SeriesDomainError("Hurwitz numbers start at n = 1", details={"n": n})
    case = EllipticCase.lemniscatic()
    if omega1 is None:
        omega1 = half_period(case, digits)
    G = eisenstein_q_oracle(case, 4 * n, digits)
    with working_precision(digits):
        value = factorial(4 * n) * mpmath.re(G) / (4 * to_mp(omega1)) ** (4 * n)
    logger.debug("H_%d from the q-expansion: %s", n, mpmath.nstr(value, digits))
    return value


def rational_reconstruction(value, max_denominator: int = 10 ** 6) -> Fraction:
    """Closest fraction with a bounded denominator to a numerically determined value."""
    return Fraction(mpmath.nstr(value, mpmath.mp.dps, strip_zeros=False, min_fixed=-mpmath.inf,
                                max_fixed=mpmath.inf)).limit_denominator(max_denominator)
