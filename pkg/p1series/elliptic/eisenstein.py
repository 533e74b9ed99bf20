"""
Eisenstein series of the two symmetric lattices.

For lambda = 0 the solution is the Weierstrass function of the lattice 2 omega_1 Z + 2 omega_2 Z,
and the Laurent coefficients give the lattice sums G_{2j}(tau) = sum' (p + q tau)^(-2j) as

    G_{2j} = c_{2j} (2 omega_1)^(2j) / (2j - 1)

Two independent paths are kept beside it: the q-expansion

    G_{2k} = 2 zeta(2k) (1 - (4k / B_{2k}) sum_{m>=1} m^(2k-1) q^m / (1 - q^m)),   q = e^(2 pi i tau)

and a direct truncated lattice sum in double precision.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, List, Optional

import mpmath
import numpy as np

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import NumericalFailureError, SeriesDomainError
from p1series.elliptic.cases import EllipticCase
from p1series.elliptic.half_period import half_period
from p1series.exact.precision import to_mp, working_precision
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.laurent.recursion import LaurentExpansion, laurent_coeffs

logger = logging.getLogger(__name__)

Q_SERIES_MAX_TERMS = 100000


@dataclass
class EisensteinValue:
    """G_{weight} of a named lattice; ``zero_by_symmetry`` marks weights the rotation group kills."""
    weight: int
    value: Any
    zero_by_symmetry: bool = False


@lru_cache(maxsize=None)
def _even_bernoulli(k: int) -> tuple:
    # sum_{r=0}^{m} C(m+1, r) B_r = 0 with B_1 = -1/2; odd B_r vanish beyond r = 1
    values = [Fraction(1)]
    for m in range(1, k + 1):
        n = 2 * m
        total = sum(comb(n + 1, 2 * j) * values[j] for j in range(m)) - Fraction(n + 1, 2)
        values.append(-total / (n + 1))
    return tuple(values)


def bernoulli_numbers(n: int) -> List[Fraction]:
    """B_0 .. B_n exactly, with B_1 = -1/2."""
    if n < 0:
        raise SeriesDomainError("n must be >= 0", details={"n": n})
    even = _even_bernoulli(n // 2)
    numbers = []
    for r in range(n + 1):
        if r == 1:
            numbers.append(Fraction(-1, 2))
        elif r % 2:
            numbers.append(Fraction(0))
        else:
            numbers.append(even[r // 2])
    return numbers


def bernoulli_even(k: int) -> Fraction:
    """B_{2k}."""
    return _even_bernoulli(k)[k]


def zeta_even(k: int):
    """zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!) at the current precision."""
    ratio = Fraction((-1) ** (k + 1)) * bernoulli_even(k) / (2 * factorial(2 * k))
    return to_mp(ratio) * (2 * mpmath.pi) ** (2 * k)


def _laurent_index(case: EllipticCase, n: int) -> int:
    if n < 1:
        raise SeriesDomainError("the Eisenstein index starts at 1", details={"n": n})
    return case.symmetry * n


def eisenstein_weight(case: EllipticCase, weight: int, digits: int = 25,
                      expansion: Optional[LaurentExpansion] = None, omega1=None) -> EisensteinValue:
    """
    G_{weight} of the case's lattice from its Laurent coefficient.

    Weights that are not multiples of the symmetry order are flagged, and their Laurent
    coefficient is checked to be exactly zero.
    """
    if weight < 4 or weight % 2:
        raise SeriesDomainError("Eisenstein weights are even and at least 4", details={"weight": weight})
    if expansion is None or expansion.N < weight:
        expansion = laurent_coeffs(case.params, weight)
    coefficient = expansion.c(weight)
    if weight % case.symmetry:
        if coefficient != 0:
            raise SeriesDomainError(f"c_{weight} = {coefficient} should vanish by symmetry")
        return EisensteinValue(weight, mpmath.mpf(0), True)
    if omega1 is None:
        omega1 = half_period(case, digits)
    with working_precision(digits):
        value = to_mp(coefficient) * (2 * to_mp(omega1)) ** weight / (weight - 1)
    return EisensteinValue(weight, value)


def eisenstein_from_laurent(case: EllipticCase, n: int, digits: int = 25,
                            expansion: Optional[LaurentExpansion] = None, omega1=None):
    """
    G_{6n}(e^(i pi/3)) for the equianharmonic case, G_{4n}(i) for the lemniscatic one.

    Args:
        case: one of the two named cases
        n: position in the symmetric sequence
        digits: precision of the result
        expansion: Laurent coefficients already at hand
        omega1: the real half-period, computed by quadrature when omitted
    """
    return eisenstein_weight(case, _laurent_index(case, n), digits, expansion, omega1).value


def _q_series_extra_digits(q_abs, k: int, prefactor) -> int:
    """Digits lost to cancellation: the size of the largest term of the Lambert sum against 1."""
    with mpmath.workdps(15):
        log_q = mpmath.log(q_abs)
        peak = max(mpmath.mpf(1), (2 * k - 1) / -log_q)
        largest = (2 * k - 1) * mpmath.log(peak) + peak * log_q + mpmath.log(abs(prefactor))
        return max(0, int(mpmath.ceil(largest / mpmath.log(10))))


def _modular_parameter(tau_modular):
    if isinstance(tau_modular, EllipticCase):
        return tau_modular.tau_modular
    return mpmath.mpc(tau_modular)


def eisenstein_q_oracle(tau_modular, weight: int, digits: int = 25):
    """
    G_{weight}(tau) from the q-expansion with exact Bernoulli numbers.

    ``tau_modular`` is a number or a named EllipticCase, whose modular parameter is then
    formed at the working precision.

    Raises:
        SeriesDomainError: for an odd or too small weight, or when |q| >= 1
    """
    if weight < 4 or weight % 2:
        raise SeriesDomainError("Eisenstein weights are even and at least 4", details={"weight": weight})
    k = weight // 2
    with working_precision(digits):
        tau = _modular_parameter(tau_modular)
        q_abs = mpmath.exp(-2 * mpmath.pi * tau.imag)
        if q_abs >= 1:
            raise SeriesDomainError("the q-expansion needs Im(tau) > 0", details={"tau": str(tau_modular)})
        prefactor = 2 * zeta_even(k) * 4 * k / to_mp(bernoulli_even(k))
        extra = _q_series_extra_digits(q_abs, k, prefactor)
    with working_precision(digits, extra=extra):
        tau = _modular_parameter(tau_modular)
        q = mpmath.expj(2 * mpmath.pi * tau)
        constant = 2 * zeta_even(k)
        prefactor = constant * 4 * k / to_mp(bernoulli_even(k))
        tolerance = mpmath.mpf(10) ** (-(digits + extra + 5))
        peak = max(1, int((2 * k - 1) / float(2 * mpmath.pi * tau.imag)) + 1)
        total = mpmath.mpc(0)
        power = mpmath.mpc(1)
        for m in range(1, Q_SERIES_MAX_TERMS + 1):
            power *= q
            term = mpmath.mpf(m) ** (2 * k - 1) * power / (1 - power)
            total += term
            if m > peak and abs(prefactor * term) < tolerance:
                break
        else:
            raise NumericalFailureError("q-series did not reach the requested precision",
                                        partial=[constant - prefactor * total], iterations=Q_SERIES_MAX_TERMS)
        logger.debug("q-series for G_%d used %d terms and %d extra digits", weight, m, extra)
        value = constant - prefactor * total
    return value


def eisenstein_lattice_sum(tau_modular, weight: int, bound: Optional[int] = None) -> complex:
    """
    sum' (p + q tau)^(-weight) over |p|, |q| <= bound in double precision.

    Convergence is only polynomial in the bound; agreement to about 1e-3 is what to expect
    at weight 4 with the default bound.
    """
    if weight < 4 or weight % 2:
        raise SeriesDomainError("Eisenstein weights are even and at least 4", details={"weight": weight})
    if bound is None:
        bound = ConfigurationsManager().get_int_for_key(SP.EISENSTEIN_LATTICE_BOUND, 200)
    tau = complex(tau_modular)
    p = np.arange(-bound, bound + 1, dtype=np.float64)
    total = 0j
    for q in range(-bound, bound + 1):
        row = p + q * tau
        if q == 0:
            row = row[p != 0]
        total += np.sum(row ** (-weight))
    return complex(total)

